"""Command-line front end.

Subcommands: eval, tables, moments, tails, sample, joint-check, report.
Every emitted number is recomputed from the library at run time; published
reference values appear only in comparison columns.  CSV output uses '.'
decimals, 17 significant digits and LF line endings; JSON payloads carry a
schema_version field.  Exit codes: 0 success, 2 usage error, 3 numeric
divergence where a finite result was required.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .catalog import ParameterError, parse_distribution, standard_catalog
from .joint import (
    JointWeighted,
    independence_additivity_check,
    joint_normalization,
    marginal,
    product_of_independents,
)
from .numerics import (
    DivergenceError,
    QuadratureConfig,
    integrate,
    is_undefined,
)
from .reference import KNOWN_DISCREPANCIES, MOMENTS_LEFT, TAILS_TABLE
from .sampling import ALGORITHM_ID, SampleStream, sample
from .summaries import build_summary, moments
from .tails import (
    arc_length,
    build_tail_report,
    survival_at_two_sided_crossing,
    tail_arc_length,
)
from .weighting import Side, WeightedDistribution, crossing_points

SCHEMA_VERSION = 1
DEFAULT_SEED = 202406

JSON_SCHEMA_NOTE = (
    "numbers may be the string 'undefined' when the quantity has no finite value"
)


class UsageError(ValueError):
    """Bad command-line input (malformed spec string, bad grid, ...)."""


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _jsonable(obj):
    if is_undefined(obj):
        return "undefined"
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


@dataclass(frozen=True)
class TablePayload:
    header: list[str]
    rows: list[list]
    default_format: str = "csv"


@dataclass(frozen=True)
class JsonPayload:
    doc: dict
    comments: list[str] | None = None  # CSV-mode header comments (sample command)
    values_key: str | None = None  # long column rendered one value per line

    @property
    def default_format(self) -> str:
        return "csv" if self.values_key else "json"


def _render(payload, fmt: str | None) -> str:
    fmt = fmt or payload.default_format
    if isinstance(payload, TablePayload):
        if fmt == "json":
            return _json_text({"header": payload.header, "rows": payload.rows})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(payload.header)
        for row in payload.rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
        return buf.getvalue()
    if fmt == "json":
        return _json_text(payload.doc)
    if payload.values_key:
        lines = list(payload.comments or [])
        lines.append(payload.values_key)
        lines.extend(_fmt(v) for v in payload.doc[payload.values_key])
        return "\n".join(lines) + "\n"
    # generic JSON-to-CSV flattening: dotted keys, one (key, value) row each
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in _flatten(_jsonable(payload.doc)):
        writer.writerow([key, _fmt(value) if isinstance(value, float) else value])
    return buf.getvalue()


def _flatten(doc, prefix: str = ""):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from _flatten(v, f"{prefix}{k}." if prefix == "" else f"{prefix}{k}.")
    elif isinstance(doc, list):
        for i, v in enumerate(doc):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix.rstrip("."), doc


def _json_text(payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "note": JSON_SCHEMA_NOTE}
    doc.update(payload)
    return json.dumps(_jsonable(doc), indent=2) + "\n"


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility sidecar written next to every output file."""

    command_line: list[str]
    config_hash: str
    abs_tol: float
    rel_tol: float
    library_version: str
    algorithm_id: str
    seeds: list[int]
    timestamp: str

    @staticmethod
    def build(argv: list[str], cfg: QuadratureConfig, seeds: list[int]) -> "RunManifest":
        fingerprint = json.dumps(
            {"abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol, "argv": argv},
            sort_keys=True,
        )
        return RunManifest(
            command_line=argv,
            config_hash=hashlib.sha256(fingerprint.encode()).hexdigest(),
            abs_tol=cfg.abs_tol,
            rel_tol=cfg.rel_tol,
            library_version=__version__,
            algorithm_id=ALGORITHM_ID,
            seeds=seeds,
            timestamp=datetime.now(timezone.utc).isoformat(),
        )


def _load_config_file(path: str) -> dict:
    data = Path(path).read_bytes()
    if path.endswith(".toml"):
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        return tomllib.loads(data.decode())
    return json.loads(data.decode())


def _resolve_quadrature(args) -> QuadratureConfig:
    abs_tol, rel_tol = 1e-10, 1e-8
    if args.config:
        raw = _load_config_file(args.config)
        abs_tol = float(raw.get("abs_tol", abs_tol))
        rel_tol = float(raw.get("rel_tol", rel_tol))
    if args.abs_tol is not None:
        abs_tol = args.abs_tol
    if args.rel_tol is not None:
        rel_tol = args.rel_tol
    return QuadratureConfig(abs_tol=abs_tol, rel_tol=rel_tol)


def _parse_dist(spec: str):
    try:
        return parse_distribution(spec)
    except (ValueError, ParameterError) as exc:
        raise UsageError(str(exc)) from exc


def _make_dist(spec: str, side: str):
    base = _parse_dist(spec)
    return base if side == "none" else WeightedDistribution(base, Side.parse(side))


def _parse_grid(token: str) -> np.ndarray:
    try:
        lo_s, hi_s, n_s = token.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError as exc:
        raise UsageError(f"grid must look like 'lo:hi:count', got {token!r}") from exc
    if n < 1 or not lo < hi:
        raise UsageError(f"degenerate grid {token!r}")
    return np.linspace(lo, hi, n)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_eval(args, cfg: QuadratureConfig):
    dist = _make_dist(args.dist, args.side)
    if args.grid:
        xs = _parse_grid(args.grid)
    elif args.what == "ppf":
        xs = np.linspace(0.01, 0.99, 99)
    else:
        xs = np.linspace(dist.ppf(0.001), dist.ppf(0.999), 201)
    fn = {"pdf": dist.pdf, "cdf": dist.cdf, "ppf": dist.ppf}[args.what]
    try:
        rows = [[float(x), float(fn(float(x)))] for x in xs]
    except ValueError as exc:
        raise UsageError(f"grid point outside the domain of {args.what}: {exc}") from exc
    return TablePayload(["x", "value"], rows)


def _status(computed, published, tol: float, flagged: bool) -> str:
    if is_undefined(computed):
        return "undefined"
    if published is None:
        return "ok"
    if abs(computed - published) > tol:
        return "mismatch" if flagged else "recheck"
    return "ok"


def _tables_moments(cfg: QuadratureConfig) -> TablePayload:
    rows = []
    for spec, w_mean, w_var, b_mean, b_var in MOMENTS_LEFT:
        base = parse_distribution(spec)
        for side_token, ref_mean, ref_var in (
            ("left", w_mean, w_var),
            ("none", b_mean, b_var),
        ):
            dist = WeightedDistribution(base, Side.LEFT) if side_token == "left" else base
            mean, var = moments(dist, cfg)
            for quantity, computed, published in (
                ("mean", mean, ref_mean),
                ("variance", var, ref_var),
            ):
                flagged = (spec, side_token, quantity) in KNOWN_DISCREPANCIES
                rows.append(
                    [
                        spec,
                        side_token,
                        quantity,
                        "undefined" if published is None else published,
                        "undefined" if is_undefined(computed) else computed,
                        ""
                        if is_undefined(computed) or published is None
                        else computed - published,
                        _status(computed, published, 1e-4, flagged),
                    ]
                )
    return TablePayload(
        ["distribution", "side", "quantity", "paper_value", "computed_value", "delta", "status"],
        rows,
    )


def _tables_normalize(cfg: QuadratureConfig) -> TablePayload:
    rows = []
    for base in standard_catalog():
        sup = base.support
        for side in Side:
            w = WeightedDistribution(base, side)
            mass = integrate(w.pdf, sup.lower, sup.upper, cfg).require_finite()
            rows.append(
                [
                    base.spec_string(),
                    side.value,
                    "mass",
                    1.0,
                    mass,
                    mass - 1.0,
                    "ok" if abs(mass - 1.0) <= 1e-8 else "recheck",
                ]
            )
    return TablePayload(
        ["distribution", "side", "quantity", "paper_value", "computed_value", "delta", "status"],
        rows,
    )


def _tables_tails(cfg: QuadratureConfig) -> TablePayload:
    rows = []
    for spec, side_token, ref_arc, ref_tail, ref_surv, ref_ppf in TAILS_TABLE:
        dist = _make_dist(spec, side_token)
        sup = dist.support
        computed = {
            "arc_length": arc_length(dist, sup.lower, sup.upper, cfg),
            "tail_arc_length": tail_arc_length(dist, 0.9, cfg),
            "survival_at_crossing": survival_at_two_sided_crossing(dist),
            "ppf_90": dist.ppf(0.9),
        }
        published = {
            "arc_length": ref_arc,
            "tail_arc_length": ref_tail,
            "survival_at_crossing": ref_surv,
            "ppf_90": ref_ppf,
        }
        for quantity, c in computed.items():
            p = published[quantity]
            rows.append(
                [
                    spec,
                    side_token,
                    quantity,
                    p,
                    "undefined" if is_undefined(c) else c,
                    "" if is_undefined(c) else c - p,
                    _status(c, p, 5e-3, False),
                ]
            )
    return TablePayload(
        ["distribution", "side", "quantity", "paper_value", "computed_value", "delta", "status"],
        rows,
    )


def _cmd_tables(args, cfg: QuadratureConfig):
    if args.which == "moments":
        return _tables_moments(cfg)
    if args.which == "normalize":
        return _tables_normalize(cfg)
    return _tables_tails(cfg)


def _cmd_moments(args, cfg: QuadratureConfig):
    rows = []
    for base in standard_catalog():
        if args.side == "none":
            entries = [base]
        else:
            entries = [WeightedDistribution(base, Side.parse(args.side)), base]
        for dist in entries:
            mean, var = moments(dist, cfg)
            undefined = is_undefined(mean) or is_undefined(var)
            rows.append(
                [
                    dist.spec_string(),
                    "undefined" if is_undefined(mean) else mean,
                    "undefined" if is_undefined(var) else var,
                    "undefined" if undefined else "ok",
                ]
            )
    return TablePayload(["distribution", "mean", "variance", "status"], rows)


def _hill_samples_or_none(dist, n: int, seed: int):
    xs = sample(dist, n, SampleStream(seed))
    return xs if xs.min() > 0 else None


def _cmd_tails(args, cfg: QuadratureConfig):
    dist = _make_dist(args.dist, args.side)
    lams = [float(tok) for tok in args.lam.split(",") if tok]
    ts = [float(tok) for tok in args.t.split(",") if tok]
    report = build_tail_report(
        dist,
        lams=lams,
        ts=ts,
        percentile=args.percentile,
        hill_samples=_hill_samples_or_none(dist, args.n, args.seed),
        cfg=cfg,
    )
    return JsonPayload(
        {"distribution": args.dist, "side": args.side, "tail_report": asdict(report)}
    )


def _cmd_sample(args, cfg: QuadratureConfig):
    dist = _make_dist(args.dist, args.side)
    xs = sample(dist, args.n, SampleStream(args.seed))
    comments = [
        f"# distribution: {args.dist}",
        f"# side: {args.side}",
        f"# n: {args.n}",
        f"# seed: {args.seed}",
        f"# algorithm: {ALGORITHM_ID}",
    ]
    doc = {
        "distribution": args.dist,
        "side": args.side,
        "n": args.n,
        "seed": args.seed,
        "algorithm": ALGORITHM_ID,
        "value": [float(x) for x in xs],
    }
    return JsonPayload(doc, comments=comments, values_key="value")


def _cmd_joint_check(args, cfg: QuadratureConfig):
    dx = _parse_dist(args.dist_x)
    dy = _parse_dist(args.dist_y)
    j = JointWeighted(product_of_independents(dx, dy))
    ps = np.linspace(0.02, 0.98, min(args.grid, 25))
    worst_marginal = 0.0
    for axis, d in (("x", dx), ("y", dy)):
        w = WeightedDistribution(d, Side.LEFT)
        for p in ps:
            coord = d.ppf(float(p))
            numeric = marginal(j, axis, coord)
            if not is_undefined(numeric):
                analytic = 0.5 * w.pdf(coord) + 0.5 * d.pdf(coord)
                worst_marginal = max(worst_marginal, abs(numeric - analytic))
    return JsonPayload(
        {
            "dist_x": args.dist_x,
            "dist_y": args.dist_y,
            "normalization": joint_normalization(j),
            "marginal_max_deviation": worst_marginal,
            "additivity_max_deviation": independence_additivity_check(dx, dy, args.grid),
        }
    )


def _cmd_report(args, cfg: QuadratureConfig):
    dist = _make_dist(args.dist, args.side)
    summary = build_summary(dist, cfg)
    tail = build_tail_report(
        dist,
        lams=[0.1, 0.5, 1.5],
        ts=[2.0, 5.0],
        hill_samples=_hill_samples_or_none(dist, 20_000, args.seed),
        cfg=cfg,
    )
    if isinstance(dist, WeightedDistribution):
        crossings = crossing_points(dist)
    else:
        crossings = crossing_points(WeightedDistribution(dist, Side.TWO_SIDED))
    return JsonPayload(
        {
            "distribution": args.dist,
            "side": args.side,
            "summary": {
                "mean": summary.mean,
                "variance": summary.variance,
                "modes": [{"x": m.x, "boundary": m.boundary} for m in summary.modes],
                "quartiles": [summary.q1, summary.q2, summary.q3],
                "p10": summary.p10,
                "p90": summary.p90,
                "bowley_b1": summary.bowley_b1,
                "kurtosis_kappa": summary.kurtosis_kappa,
                "mean_shift": summary.mean_shift,
                "cre": summary.cre,
            },
            "crossings": crossings,
            "tail_report": asdict(tail),
        }
    )


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

_SIDES = ["none", "left", "right", "two"]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abs-tol", type=float, default=None, help="quadrature absolute tolerance")
    common.add_argument("--rel-tol", type=float, default=None, help="quadrature relative tolerance")
    common.add_argument("--config", default=None, help="TOML/JSON file with abs_tol / rel_tol")
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--out", default=None, help="output path (manifest written alongside)")

    parser = argparse.ArgumentParser(
        prog="infoweight",
        description="Information-weighted distributions: tables, grids, samples, diagnostics.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate pdf/cdf/ppf on a grid")
    p.add_argument("--dist", required=True, help="spec string, e.g. 'pareto(2,1)'")
    p.add_argument("--side", choices=_SIDES, default="none")
    p.add_argument("--what", choices=["pdf", "cdf", "ppf"], required=True)
    p.add_argument("--grid", default=None, help="lo:hi:count (ppf grids live in (0,1))")

    p = sub.add_parser("tables", parents=[common], help="regenerate a reference table")
    p.add_argument("which", choices=["moments", "normalize", "tails"])

    p = sub.add_parser("moments", parents=[common], help="catalog moment sweep")
    p.add_argument("--side", choices=_SIDES, default="left")

    p = sub.add_parser("tails", parents=[common], help="tail diagnostics as JSON")
    p.add_argument("--dist", required=True)
    p.add_argument("--side", choices=_SIDES, default="none")
    p.add_argument("--lambda", dest="lam", default="0.1,0.5,1.5")
    p.add_argument("--t", default="2,5")
    p.add_argument("--percentile", type=float, default=0.9)
    p.add_argument("--n", type=int, default=20_000, help="sample size behind the Hill estimate")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("sample", parents=[common], help="seeded inverse-transform samples")
    p.add_argument("--dist", required=True)
    p.add_argument("--side", choices=_SIDES, default="none")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("joint-check", parents=[common], help="bivariate weighting diagnostics")
    p.add_argument("--dist-x", required=True)
    p.add_argument("--dist-y", required=True)
    p.add_argument("--grid", type=int, default=101)

    p = sub.add_parser("report", parents=[common], help="summary + tail JSON bundle")
    p.add_argument("--dist", required=True)
    p.add_argument("--side", choices=_SIDES, default="none")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    return parser


_COMMANDS = {
    "eval": _cmd_eval,
    "tables": _cmd_tables,
    "moments": _cmd_moments,
    "tails": _cmd_tails,
    "sample": _cmd_sample,
    "joint-check": _cmd_joint_check,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_quadrature(args)
        payload = _COMMANDS[args.command](args, cfg)
        text = _render(payload, args.format)
    except (UsageError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    seeds = [args.seed] if hasattr(args, "seed") else []
    manifest = RunManifest.build(argv, cfg, seeds)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8", newline="")
        sidecar = out.with_name(out.name + ".manifest.json")
        sidecar.write_text(
            json.dumps(_jsonable(asdict(manifest)), indent=2) + "\n", encoding="utf-8"
        )
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

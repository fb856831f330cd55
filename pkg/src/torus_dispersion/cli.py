"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 budget exceeded,
3 invalid input (including bad command-line usage).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bounds
from .core import PointSet, Real, canonicalize, is_empty
from .errors import BudgetExceededError, DispersionError, InvalidInputError
from .exact import (
    DEFAULT_BUDGET,
    cyclic_gap_dispersion_1d,
    exact_dispersion_boxes,
    exact_dispersion_periodic,
    sampled_dispersion_lower_bound,
)
from .generators import KINDS, GeneratorSpec, generate
from .witness import witness_theorem1

EXIT_OK, EXIT_VIOLATION, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3
FLOAT_SLACK = 1e-12
SWEEP_COLUMNS = ["kind", "n", "d", "mode", "volume", "theorem1_bound", "ratio"]


@dataclass
class RunConfig:
    command: str
    ranges: str = "periodic"
    mode: str = "exact"
    input: Optional[Path] = None
    output: Optional[Path] = None
    generator: Optional[GeneratorSpec] = None
    dim: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    trials: int = 1000
    workers: int = 1
    format: str = "json"
    best_axis: bool = False
    rational: bool = False
    timing: bool = True
    sweep_n: list[int] = field(default_factory=list)
    sweep_d: list[int] = field(default_factory=list)
    sets: int = 0
    n_range: tuple[int, int] = (1, 10)

    def __post_init__(self):
        if self.mode == "gap1d" and self.ranges != "periodic":
            raise InvalidInputError("gap1d mode applies to periodic ranges only")
        if self.mode == "witness" and self.ranges != "periodic":
            raise InvalidInputError("witness mode applies to periodic ranges only")


# ---------------------------------------------------------------- input


def _parses(cell: str) -> bool:
    try:
        Fraction(cell.strip())
        return True
    except (ValueError, ZeroDivisionError):
        return False


def read_points(path, dim: Optional[int] = None, exact: bool = False) -> PointSet:
    """Read a CSV file with one point per row.

    A first line containing a non-numeric cell is taken as a header.
    The dimension is the column count unless ``dim`` is given.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    rows = []
    width = dim
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        if not rows and lineno == 1 and not all(_parses(c) for c in row):
            continue
        if width is None:
            width = len(row)
        if len(row) != width:
            raise InvalidInputError(
                f"{path}:{lineno}: expected {width} columns, got {len(row)}")
        for c in row:
            if not _parses(c):
                raise InvalidInputError(f"{path}:{lineno}: non-numeric cell {c!r}")
        rows.append(row)
    if not rows and dim is None:
        raise InvalidInputError(f"{path}: no points; pass --dim for an empty set")
    try:
        return canonicalize(rows, dim=width, exact=exact)
    except InvalidInputError as exc:
        raise InvalidInputError(f"{path}: {exc}") from exc


def load_points(config: RunConfig) -> PointSet:
    if config.input is not None:
        return read_points(config.input, config.dim, config.rational)
    if config.generator is not None:
        return generate(config.generator, config.rational)
    raise InvalidInputError("no point source: pass --input or a generator (--kind)")


# ---------------------------------------------------------------- output


def _num(x: Real):
    return float(x) if isinstance(x, Fraction) else x


def _meets(volume: Real, bound: Real, exact: bool) -> bool:
    return volume >= bound if exact else volume >= bound - FLOAT_SLACK


def _run(points: PointSet, config: RunConfig):
    """Dispatch on mode; returns (volume, box or None, exact flag, examined, extra)."""
    if config.mode == "exact":
        fn = exact_dispersion_periodic if config.ranges == "periodic" else exact_dispersion_boxes
        r = fn(points, budget=config.budget, workers=config.workers)
        return r.volume, r.witness, r.exact, r.candidates_examined, {}
    if config.mode == "sample":
        r = sampled_dispersion_lower_bound(points, config.trials, config.seed, config.ranges)
        return r.volume, r.witness, r.exact, r.candidates_examined, {}
    if config.mode == "gap1d":
        r = cyclic_gap_dispersion_1d(points)
        return r.volume, r.witness, r.exact, r.candidates_examined, {}
    if config.mode == "witness":
        w = witness_theorem1(points, best_axis=config.best_axis)
        extra = {"case": w.case.value, "excluded_points": list(w.excluded_points),
                 "window_axis": w.window_axis}
        return w.volume, w.box, False, 0, extra
    raise InvalidInputError(f"unknown mode {config.mode!r}")


def compute(config: RunConfig, points: Optional[PointSet] = None) -> dict:
    """Dispersion report for one point set as a JSON-ready dict."""
    if points is None:
        points = load_points(config)
    start = time.perf_counter()
    volume, box, exact, examined, extra = _run(points, config)
    elapsed = (time.perf_counter() - start) * 1000
    rational = points.exact or config.rational
    t1 = bounds.theorem1_bound(points.n, points.dim, exact=rational)
    witness = None
    if box is not None:
        witness = {"anchors": [_num(a) for a in box.anchors],
                   "lengths": [_num(x) for x in box.lengths]}
    report = {
        "n": points.n,
        "d": points.dim,
        "ranges": config.ranges,
        "mode": config.mode,
        "volume": _num(volume),
        "witness": witness,
        "exact": exact,
        "bound_theorem1": _num(t1),
        "bound_split_cube": bounds.split_cube_bound(points.n),
        "meets_theorem1": _meets(volume, t1, rational) if config.ranges == "periodic" else None,
        "candidates_examined": examined,
        "wall_time_ms": round(elapsed, 3) if config.timing else None,
        "arithmetic": "rational" if rational else "float",
    }
    report.update(extra)
    if rational:
        report["exact_values"] = {
            "volume": str(volume),
            "anchors": [str(a) for a in box.anchors] if box is not None else None,
            "lengths": [str(x) for x in box.lengths] if box is not None else None,
        }
    return report


def _verify_one(points: PointSet, config: RunConfig) -> dict:
    volume, box, *_ = _run(points, config)
    rational = points.exact or config.rational
    bound = bounds.theorem1_bound(points.n, points.dim, exact=rational)
    empty = box is not None and is_empty(box, points)
    return {"n": points.n, "d": points.dim, "volume": _num(volume),
            "bound_theorem1": _num(bound), "witness_empty": empty,
            "ok": empty and _meets(volume, bound, rational)}


def verify(config: RunConfig) -> tuple[int, dict]:
    """Recompute dispersions and check them against min(1, d/n)."""
    if config.mode not in ("exact", "witness"):
        raise InvalidInputError("verify supports --mode exact or witness")
    if config.ranges != "periodic":
        raise InvalidInputError("verify checks periodic ranges")
    if config.sets > 0:
        lo, hi = config.n_range
        dims = config.sweep_d or [1, 2, 3]
        rng = random.Random(config.seed)
        sets = []
        for i in range(config.sets):
            d, n = rng.choice(dims), rng.randint(lo, hi)
            spec = GeneratorSpec("random", n=n, d=d, seed=config.seed + i)
            sets.append(generate(spec, config.rational))
    else:
        sets = [load_points(config)]
    results = [_verify_one(p, config) for p in sets]
    violations = [i for i, r in enumerate(results) if not r["ok"]]
    report = {"mode": config.mode, "ranges": config.ranges, "sets": len(results),
              "passed": not violations, "violations": violations, "results": results}
    return (EXIT_OK if not violations else EXIT_VIOLATION), report


def sweep(config: RunConfig) -> list[dict]:
    """One row per (size, d) of the generator family."""
    base = config.generator
    if base is None:
        raise InvalidInputError("sweep needs a generator (--kind)")
    sizes = config.sweep_n
    dims = config.sweep_d or [base.d]
    rows = []
    for d in dims:
        for size in sizes:
            if base.kind == "grid":
                spec = GeneratorSpec("grid", m=size, d=d)
            else:
                spec = GeneratorSpec(base.kind, n=size, d=d, seed=base.seed, alpha=base.alpha)
            points = generate(spec, config.rational)
            volume, *_ = _run(points, config)
            t1 = bounds.theorem1_bound(points.n, d, exact=points.exact)
            rows.append({"kind": base.kind, "n": points.n, "d": d, "mode": config.mode,
                         "volume": _num(volume), "theorem1_bound": _num(t1),
                         "ratio": _num(volume / t1)})
    return rows


def _csv_text(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k) for k in columns})
    return buf.getvalue()


def _flat_report(report: dict) -> dict:
    flat = {k: v for k, v in report.items() if not isinstance(v, (dict, list))}
    w = report.get("witness")
    flat["anchors"] = ";".join(repr(a) for a in w["anchors"]) if w else ""
    flat["lengths"] = ";".join(repr(x) for x in w["lengths"]) if w else ""
    return flat


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _points_text(points: PointSet, fmt: str, spec: Optional[GeneratorSpec]) -> str:
    def cell(c):
        return str(c) if isinstance(c, Fraction) else repr(c)

    if fmt == "json":
        return render_json({"generator": spec.to_dict() if spec else None,
                            "d": points.dim,
                            "points": [[cell(c) if isinstance(c, Fraction) else c for c in p]
                                       for p in points]})
    lines = [",".join(f"x{i + 1}" for i in range(points.dim))]
    lines += [",".join(cell(c) for c in p) for p in points]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- argparse


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    """Parse ``"5,8,13"``, ``"1:4"`` (inclusive) or ``""`` into integers."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ":" in part:
            lo, hi = part.split(":")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _range_pair(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


def _add_source(p: argparse.ArgumentParser, sweepable: bool = False):
    g = p.add_argument_group("point source")
    g.add_argument("--input", type=Path, help="CSV file, one point per row")
    g.add_argument("--config", type=Path, help="JSON file holding a generator spec")
    g.add_argument("--kind", choices=KINDS, help="generate points instead of reading them")
    if sweepable:
        g.add_argument("--n", type=_int_list, default=[],
                       help="sizes: list '5,8,13' or inclusive range '1:10' (m for grid)")
        g.add_argument("--dims", type=_int_list, default=[], help="dimensions, as for --n")
    else:
        g.add_argument("--n", type=int, help="number of points")
    g.add_argument("--m", type=int, help="grid resolution per axis")
    g.add_argument("--dim", type=int, help="dimension (also for empty CSV input)")
    g.add_argument("--alpha", type=lambda s: tuple(float(x) for x in s.split(",")),
                   help="Kronecker direction, comma separated")
    g.add_argument("--rational", action="store_true", help="exact rational arithmetic")


def _add_run(p: argparse.ArgumentParser, modes=("exact", "witness", "sample", "gap1d"),
             default_mode="exact"):
    p.add_argument("--ranges", choices=("periodic", "boxes"), default="periodic")
    p.add_argument("--mode", choices=modes, default=default_mode)
    p.add_argument("--trials", type=int, default=1000, help="samples for --mode sample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum candidate product for exact search")
    p.add_argument("--workers", type=int, default=1,
                   help="partitions of the exact search, run in parallel processes")
    p.add_argument("--best-axis", action="store_true",
                   help="witness: try every axis as window axis")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", type=Path)
    p.add_argument("--no-timing", action="store_true",
                   help="report wall_time_ms as null (byte-stable output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="torus-dispersion",
                     description="Largest empty boxes on the torus and in the unit cube.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="dispersion of one point set")
    _add_source(p)
    _add_run(p)

    p = sub.add_parser("witness", help="constructive empty box of volume >= min(1, d/n)")
    _add_source(p)
    _add_run(p, modes=("witness",), default_mode="witness")

    p = sub.add_parser("generate", help="write a generated point set")
    _add_source(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--output", type=Path)

    p = sub.add_parser("verify", help="check the min(1, d/n) lower bound")
    _add_source(p)
    _add_run(p, modes=("exact", "witness"))
    p.add_argument("--sets", type=int, default=0,
                   help="check this many seeded random sets instead of one input")
    p.add_argument("--n-range", type=_range_pair, default=(1, 10),
                   help="inclusive n range for --sets, e.g. 1:10")
    p.add_argument("--dims", type=_int_list, default=[], help="dimensions for --sets")

    p = sub.add_parser("sweep", help="CSV table of dispersion against n and d")
    _add_source(p, sweepable=True)
    _add_run(p, modes=("exact", "witness", "sample", "gap1d"))
    p.set_defaults(format="csv")
    return parser


def _generator_from_args(args) -> Optional[GeneratorSpec]:
    if getattr(args, "config", None) is not None:
        try:
            data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise InvalidInputError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(data, dict):
            raise InvalidInputError("config must be a JSON object")
        return GeneratorSpec.from_dict(data.get("generator", data))
    if args.kind is None:
        return None
    n = args.n
    if isinstance(n, list):  # sweep: sizes are supplied per row
        n = n[0] if n else 1
    dims = getattr(args, "dims", None)
    d = args.dim or (dims[0] if dims else None)
    if d is None:
        d = 2 if args.kind == "fibonacci" else 1
    m = args.m if args.m is not None else (n if args.kind == "grid" else None)
    return GeneratorSpec(args.kind, n=n, m=m, d=d, seed=getattr(args, "seed", 0),
                         alpha=args.alpha)


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        ranges=getattr(args, "ranges", "periodic"),
        mode=getattr(args, "mode", "exact"),
        input=args.input,
        output=args.output,
        generator=_generator_from_args(args),
        dim=args.dim,
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        seed=getattr(args, "seed", 0),
        trials=getattr(args, "trials", 1000),
        workers=getattr(args, "workers", 1),
        format=args.format,
        best_axis=getattr(args, "best_axis", False),
        rational=args.rational,
        timing=not getattr(args, "no_timing", False),
    )
    if args.command == "sweep":
        cfg.sweep_n = args.n
        cfg.sweep_d = args.dims
    if args.command == "verify":
        cfg.sets = args.sets
        cfg.n_range = args.n_range
        cfg.sweep_d = args.dims
    if args.input is not None and cfg.generator is not None:
        raise InvalidInputError("pass either --input or a generator, not both")
    return cfg


def _emit(text: str, output: Optional[Path]):
    if output is None:
        sys.stdout.write(text)
    else:
        try:
            output.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InvalidInputError(f"cannot write {output}: {exc}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = config_from_args(args)
        code = EXIT_OK
        if config.command in ("compute", "witness"):
            report = compute(config)
            text = (render_json(report) if config.format == "json"
                    else _csv_text(list(_flat_report(report)), [_flat_report(report)]))
        elif config.command == "generate":
            points = load_points(config)
            text = _points_text(points, config.format, config.generator)
        elif config.command == "verify":
            code, report = verify(config)
            text = render_json(report)
        else:
            rows = sweep(config)
            text = (_csv_text(SWEEP_COLUMNS, rows) if config.format == "csv"
                    else render_json(rows))
        _emit(text, config.output)
        return code
    except BudgetExceededError as exc:
        sys.stdout.write(render_json({"error": "budget-exceeded", "message": str(exc),
                                      "candidates": exc.candidates, "budget": exc.budget}))
        return EXIT_BUDGET
    except (InvalidInputError, ValueError) as exc:
        sys.stderr.write(f"torus-dispersion: error: {exc}\n")
        return EXIT_INPUT
    except DispersionError as exc:
        sys.stderr.write(f"torus-dispersion: internal error: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())

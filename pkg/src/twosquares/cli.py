"""Command-line front end.

Exit status: 0 on success, 1 on usage or input errors, 2 when ``--verify``
finds the reported squares (or disks) infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from . import oracle
from .generate import clustered_instance, format_instance, uniform_instance
from .geom import TOL
from .lcover import solve_cover
from .lhit import solve_hit
from .rcover import solve_rcover
from .source import InstanceError, parse_instance
from .twocenter import approximate_two_center
from .verify import verify_solution

SOLVERS = {"cover": solve_cover, "hit": solve_hit, "cover-restricted": solve_rcover}
PROBLEM_TAGS = {"cover": "cover", "hit": "hit", "cover-restricted": "rcover"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


@dataclass
class SolutionDocument:
    problem: str
    sigma: float
    config: int | None = None
    squares: list[dict] = field(default_factory=list)
    disks: list[dict] | None = None
    stats: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)
    verify: str | None = None

    def to_json(self) -> str:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        return json.dumps(data, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SolutionDocument":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        g = lambda v: f"{v:.9g}"
        parts = [f"sigma={g(self.sigma)}"]
        if self.config is not None:
            parts.append(f"config={self.config}")
        for i, sq in enumerate(self.squares, 1):
            parts.append(f"s{i}=({g(sq['min_x'])},{g(sq['min_y'])},{g(sq['side'])})")
        if self.disks:
            parts.append(f"radius={g(self.disks[0]['radius'])}")
            parts.append(f"lower_bound={g(self.disks[0]['lower_bound'])}")
            for i, d in enumerate(self.disks, 1):
                parts.append(f"d{i}=({g(d['center_x'])},{g(d['center_y'])},{g(d['radius'])})")
        if self.verify is not None:
            parts.append(f"verify={self.verify}")
        return " ".join(parts)


def _bounds(source) -> list[float]:
    lo = np.full(2, np.inf)
    hi = np.full(2, -np.inf)
    for rows in source.blocks():
        pts = rows.reshape(-1, 2)
        lo = np.minimum(lo, pts.min(axis=0))
        hi = np.maximum(hi, pts.max(axis=0))
    return [float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])]


def _square_doc(sq) -> dict:
    return {"min_x": sq.min_x, "min_y": sq.min_y, "side": sq.side}


def _solve(args, source) -> tuple[SolutionDocument, object, object]:
    mode = args.command if args.command != "two-center" else args.mode
    start = time.perf_counter()
    sol = SOLVERS[mode](source, args.tolerance)
    disks = None
    result = sol
    if args.command == "two-center":
        result = approximate_two_center(sol)
        disks = [{"center_x": d.center.x, "center_y": d.center.y, "radius": d.radius,
                  "lower_bound": result.lower_bound} for d in result.disks]
    elapsed = time.perf_counter() - start
    doc = SolutionDocument(
        problem=sol.problem, sigma=sol.sigma, config=sol.config,
        squares=[_square_doc(sol.s1), _square_doc(sol.s2)], disks=disks,
        stats={"n": sol.n, "bounds": _bounds(source)},
        timing={"solve_seconds": round(elapsed, 6)},
    )
    return doc, sol, result


def _run_oracle(args, source) -> SolutionDocument:
    segs = np.concatenate(list(source.blocks()))
    if len(segs) > 12:
        raise UsageError("oracle is limited to 12 segments")
    start = time.perf_counter()
    if args.mode == "cover":
        value = oracle.oracle_cover(segs, args.tolerance)
    elif args.mode == "hit":
        value = oracle.oracle_partition(segs, oracle.min_hit_square, args.tolerance)
    else:
        value = oracle.oracle_partition(segs, oracle.min_cover_square, args.tolerance)
    return SolutionDocument(problem=f"oracle-{PROBLEM_TAGS[args.mode]}", sigma=value,
                            stats={"n": len(segs), "bounds": _bounds(source)},
                            timing={"solve_seconds": round(time.perf_counter() - start, 6)})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twosquares", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, svg=True):
        p.add_argument("--input", default="-", help="instance file, '-' for standard input")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--tolerance", type=float, default=TOL)
        if svg:
            p.add_argument("--svg", help="write an SVG drawing of the solution")
            p.add_argument("--verify", action="store_true",
                           help="re-check feasibility of the reported solution")

    for name in ("cover", "hit", "cover-restricted"):
        common(sub.add_parser(name, help=f"solve the {name} problem"))
    tc = sub.add_parser("two-center", help="sqrt(2)-approximate two disks")
    common(tc)
    tc.add_argument("--mode", choices=tuple(SOLVERS), default="cover")
    orc = sub.add_parser("oracle", help="brute-force optimum for small instances")
    common(orc, svg=False)
    orc.add_argument("--mode", choices=tuple(SOLVERS), default="cover")
    gen = sub.add_parser("gen", help="write a random instance to standard output")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--clustered", action="store_true")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "gen":
            if args.n < 1 or args.seed < 0:
                raise UsageError("--n must be positive and --seed nonnegative")
            make = clustered_instance if args.clustered else uniform_instance
            out.write(format_instance(make(args.n, args.seed)))
            return 0
        source = parse_instance(args.input)
        if args.command == "oracle":
            doc = _run_oracle(args, source)
            status = 0
        else:
            doc, sol, result = _solve(args, source)
            status = 0
            if args.verify:
                ok = verify_solution(result, source, args.tolerance)
                doc.verify = "PASS" if ok else "FAIL"
                status = 0 if ok else 2
            if args.svg:
                from .report import emit_svg
                disks = result.disks if args.command == "two-center" else None
                try:
                    emit_svg(sol, source, args.svg, disks)
                except OSError as exc:
                    raise InstanceError(f"cannot write {args.svg}: {exc}") from None
        out.write((doc.to_json() if args.format == "json" else doc.to_text()) + "\n")
        return status
    except UsageError as exc:
        sys.stderr.write(str(exc).rstrip() + "\n")
        return 1
    except InstanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

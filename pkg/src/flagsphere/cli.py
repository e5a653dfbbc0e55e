"""Command-line pipeline: generate, flagify, verify, color, certify, sample.

All commands are deterministic given their inputs, flags, and seeds, and
print machine-readable JSON reports to stdout. Exit codes: 0 success,
1 domain error, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .complexes import f_vector, is_flag, minimal_nonfaces, replay, verify_closed_3_manifold
from .coloring import (
    PeelParams,
    certify_lower_bound,
    measure_alpha,
    peel_color_3,
)
from .cyclic import cyclic_4_sphere
from .errors import FlagsphereError, ParseError
from .flagify import flagify
from .io import (
    read_complex,
    read_graph,
    read_trace,
    write_coloring,
    write_complex,
    write_trace,
)
from .randomclique import RandomCliqueParams, run_experiment


@dataclass(frozen=True)
class StatsReport:
    f_vector: tuple[int, ...]
    euler: int
    is_flag: bool
    manifold_checks: dict[str, bool]
    empty_triangle_count: int
    subdivision_count: int
    chromatic_upper: int | None
    chromatic_lower: int | None
    alpha_lower: int
    alpha_exact: int | None
    conjecture_value: int

    def as_dict(self) -> dict:
        return {
            "f_vector": list(self.f_vector),
            "euler": self.euler,
            "is_flag": self.is_flag,
            "manifold_checks": self.manifold_checks,
            "empty_triangle_count": self.empty_triangle_count,
            "subdivision_count": self.subdivision_count,
            "chromatic_upper": self.chromatic_upper,
            "chromatic_lower": self.chromatic_lower,
            "alpha_lower": self.alpha_lower,
            "alpha_exact": self.alpha_exact,
            "conjecture_value": self.conjecture_value,
        }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def cmd_cyclic(args) -> int:
    sphere = cyclic_4_sphere(args.n)
    write_complex(sphere.complex, args.out)
    _emit(
        {
            "n": sphere.n,
            "facets": sphere.complex.facet_count,
            "out": str(args.out),
        }
    )
    return 0


def cmd_flagify(args) -> int:
    g = read_graph(args.graph)
    complex_, report, trace = flagify(g, args.n, audit=args.audit)
    write_complex(complex_, args.out)
    if args.trace:
        write_trace(trace, args.trace)
    _emit(report.as_dict())
    return 0


def cmd_verify(args) -> int:
    X = read_complex(args.infile)
    checks = verify_closed_3_manifold(X)
    flag = is_flag(X)
    empty_tris = sum(1 for f in minimal_nonfaces(X, 3) if len(f) == 3)
    chromatic_upper: int | None = None
    if flag and checks.passed:
        params = PeelParams(x=args.x, planar_strategy=args.strategy, exact4_cap=args.cap)
        chromatic_upper = peel_color_3(X, params).color_count
    alpha = measure_alpha(X, seed=args.seed, node_budget=args.budget)
    report = StatsReport(
        f_vector=f_vector(X).counts,
        euler=f_vector(X).euler,
        is_flag=flag,
        manifold_checks=checks.as_dict(),
        empty_triangle_count=empty_tris,
        subdivision_count=X.subdivision_vertex_count(),
        chromatic_upper=chromatic_upper,
        chromatic_lower=None,
        alpha_lower=alpha.greedy_size,
        alpha_exact=alpha.exact_size,
        conjecture_value=alpha.conjecture_value,
    )
    _emit(report.as_dict())
    return 0


def cmd_color(args) -> int:
    X = read_complex(args.infile)
    params = PeelParams(x=args.x, planar_strategy=args.strategy, exact4_cap=args.cap)
    coloring = peel_color_3(X, params)
    if args.out:
        write_coloring(coloring, args.out)
    _emit({"vertices": X.vertex_count, "colors": coloring.color_count})
    return 0


def cmd_certify(args) -> int:
    X = read_complex(args.infile)
    g = read_graph(args.graph)
    report = certify_lower_bound(X, g, args.k, node_budget=args.budget)
    _emit(report.as_dict())
    return 0


def cmd_random_clique(args) -> int:
    if args.config:
        try:
            raw = json.loads(args.config.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad config JSON: {exc}") from exc
        for key in ("n", "alpha", "seed"):
            if key not in raw:
                raise ParseError(f"config missing required key {key!r}")
        params = RandomCliqueParams(
            n=int(raw["n"]),
            alpha=float(raw["alpha"]),
            d=int(raw.get("d", 3)),
            seed=int(raw["seed"]),
        )
    else:
        if args.n is None or args.alpha is None or args.seed is None:
            raise ParseError("random-clique needs --config or all of --n/--alpha/--seed")
        params = RandomCliqueParams(n=args.n, alpha=args.alpha, d=args.d, seed=args.seed)
    _emit(run_experiment(params))
    return 0


def cmd_replay(args) -> int:
    base = read_complex(args.infile)
    trace = read_trace(args.trace)
    result = replay(base, trace)
    write_complex(result, args.out)
    _emit(
        {
            "events": len(trace),
            "vertices": result.vertex_count,
            "facets": result.facet_count,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagsphere",
        description="flag triangulations of the 3-sphere: construction and certification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclic", help="generate a cyclic 4-sphere boundary complex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("flagify", help="flagify a triangle-free graph into a 3-sphere")
    p.add_argument("--graph", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--trace", default=None)
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=cmd_flagify)

    p = sub.add_parser("verify", help="statistics and manifold checks for a complex")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--x", type=float, default=math.sqrt(5.0))
    p.add_argument("--strategy", choices=("exact4", "five", "greedy"), default="exact4")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--budget", type=int, default=20_000_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="peel-color the skeleton of a flag 3-sphere")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--x", type=float, default=math.sqrt(5.0))
    p.add_argument("--strategy", choices=("exact4", "five", "greedy"), default="exact4")
    p.add_argument("--cap", type=int, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("certify", help="certify a chromatic lower bound via a subgraph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=20_000_000)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("random-clique", help="random clique-complex experiment")
    p.add_argument("--config", type=_path_arg, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_random_clique)

    p = sub.add_parser("replay", help="re-apply a subdivision trace to a base complex")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--trace", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_replay)

    return parser


def _path_arg(value: str):
    from pathlib import Path

    return Path(value)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 2
    except FlagsphereError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

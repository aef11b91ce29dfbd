"""Command handlers shared by the HTTP endpoints and the CLI.

Each handler takes plain data, runs the corresponding library
operation, and returns the canonical JSON-ready dict.  Validation
failures raise the library's typed errors; the callers translate them
(HTTP status codes, CLI exit codes).  Handlers are deterministic:
identical arguments give identical dicts.
"""

from __future__ import annotations

from typing import Any, Sequence

from ..analysis import (
    Tolerance,
    check_convex_in,
    div,
    get_function,
    real_str,
    second_derivative_test,
)
from ..checking import LawReport
from ..errors import ParseError
from ..fdist import FiniteDist
from ..hull import HullWitness, hull_eval, hull_union_split, witness_from_json, witness_to_json
from ..multiary import convn
from ..rational import format_rational, parse_rational
from ..registry import full_law_suite, get_instance
from ..spaces import ConvexSpace


def _parse_dist(data: Any) -> FiniteDist:
    if isinstance(data, dict):
        data = data.get("weights")
    if not isinstance(data, (list, tuple)):
        raise ParseError("a distribution is a list of rational weights")
    return FiniteDist(tuple(parse_rational(str(w)) for w in data))


def run_laws(instance: str, seed: int = 0, cases: int = 500) -> dict:
    space = get_instance(instance)
    report = full_law_suite(space, seed=seed, cases=cases)
    return {
        "instance": instance,
        "seed": seed,
        "cases": cases,
        **report.to_json(),
    }


def barycenter(instance: str, weights: Sequence[Any], points: Sequence[Any]) -> dict:
    space = get_instance(instance)
    d = _parse_dist(list(weights))
    pts = [space.point_from_json(p) for p in points]
    value = convn(space, d, pts)
    return {
        "instance": instance,
        "weights": [str(w) for w in d.weights],
        "point": space.point_to_json(value),
    }


def hull_split(instance: str, witness: Any, x_indices: Sequence[int],
               default_x: Any, default_y: Any) -> dict:
    space: ConvexSpace = get_instance(instance)
    z: HullWitness = witness_from_json(space, witness)
    bad = [i for i in x_indices if not 0 <= int(i) < z.n]
    if bad:
        raise ParseError(f"x_indices out of range for arity {z.n}: {bad}")
    x_values = {z.gens[int(i)] for i in x_indices}
    split = hull_union_split(space, z, lambda g: g in x_values,
                             space.point_from_json(default_x),
                             space.point_from_json(default_y))
    target = hull_eval(space, z)
    rebuilt = space.conv(split.p, hull_eval(space, split.x), hull_eval(space, split.y))
    return {
        "instance": instance,
        "p": format_rational(split.p),
        "x": witness_to_json(space, split.x),
        "y": witness_to_json(space, split.y),
        "point": space.point_to_json(target),
        "reconstructed": rebuilt == target,
    }


def divergence(p_dist: Any, q_dist: Any) -> dict:
    P = _parse_dist(p_dist)
    Q = _parse_dist(q_dist)
    value = div(P, Q)
    return {
        "P": [str(w) for w in P.weights],
        "Q": [str(w) for w in Q.weights],
        "dominated": True,
        "divergence": real_str(value),
    }


def convex_check(fn_name: str, mode: str = "convex",
                 lo: float = 0.0, hi: float = 1.0,
                 cases: int = 10_000, seed: int = 0, slack: float = 1e-9,
                 grid_points: int = 0) -> dict:
    fn = get_function(fn_name)
    tol = Tolerance(slack=slack)
    report = check_convex_in(fn, (lo, hi), seed=seed, cases=cases,
                             tol=tol, mode=mode)
    if grid_points:
        report = LawReport.merge([
            report,
            second_derivative_test(fn, (lo, hi), grid_points=grid_points,
                                   tol=tol, mode=mode),
        ])
    return {
        "function": fn_name,
        "mode": mode,
        "interval": [real_str(lo), real_str(hi)],
        "seed": seed,
        "cases": cases,
        "slack": real_str(slack),
        **report.to_json(),
    }

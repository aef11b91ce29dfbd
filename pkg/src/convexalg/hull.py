"""Convex sets, hull membership witnesses, and the union-split decomposition.

A hull is represented by its computational content: a witness pairing a
finite generator list with a distribution over it, evaluating to a
point via convn.  There is no membership decision procedure for
abstract sets; the witness is the proof.

hull_union_split decomposes a witness over generators drawn from a
union X | Y into a convex combination of an X-witness and a Y-witness:
p collects the mass of the X-tagged generators, both blocks are
renormalized, and

    conv(p, eval(x), eval(y)) = eval(z)

holds exactly.  Empty blocks fall back to caller-supplied default
points (the nonemptiness hypotheses); the p = 0 and p = 1 cases then
hold by the unit law regardless of the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .checking import LawReport, Rng, rand_fdist, rand_prob, run_law
from .errors import ArityMismatchError, ParseError
from .fdist import FiniteDist
from .multiary import convn
from .rational import Prob, parse_rational
from .spaces import ConvexSpace, Point, PointSampler


@dataclass(frozen=True)
class HullWitness:
    """A point of a hull, given as weights over explicit generators."""

    dist: FiniteDist
    gens: tuple[Point, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        if len(self.gens) != self.dist.n:
            raise ArityMismatchError(
                f"{self.dist.n} weights for {len(self.gens)} generators")

    @property
    def n(self) -> int:
        return self.dist.n


def hull_eval(space: ConvexSpace, w: HullWitness) -> Point:
    """The point the witness certifies: convn(dist, gens)."""
    return convn(space, w.dist, w.gens)


def witness_to_json(space: ConvexSpace, w: HullWitness) -> dict:
    return {
        "weights": [str(v) for v in w.dist.weights],
        "generators": [space.point_to_json(g) for g in w.gens],
    }


def witness_from_json(space: ConvexSpace, data: Any) -> HullWitness:
    if not isinstance(data, dict) or "weights" not in data or "generators" not in data:
        raise ParseError("witness needs 'weights' and 'generators'")
    weights = [parse_rational(str(v)) for v in data["weights"]]
    gens = tuple(space.point_from_json(g) for g in data["generators"])
    return HullWitness(FiniteDist(tuple(weights)), gens)


def mix_witnesses(p: Prob, a: HullWitness, b: HullWitness) -> HullWitness:
    """The witness for conv(p, eval(a), eval(b)): concatenate and rescale."""
    p = Fraction(p)
    weights = tuple(p * w for w in a.dist.weights) + \
        tuple((1 - p) * w for w in b.dist.weights)
    return HullWitness(FiniteDist(weights), a.gens + b.gens)


@dataclass(frozen=True)
class HullSplit:
    """Result of hull_union_split: eval(z) = conv(p, eval(x), eval(y))."""

    p: Prob
    x: HullWitness
    y: HullWitness


def _sub_witness(z: HullWitness, picked: Sequence[int], mass: Fraction,
                 default: Point) -> HullWitness:
    if mass == 0:
        return HullWitness(FiniteDist.point_mass(1, 0), (default,))
    weights = tuple(z.dist[i] / mass for i in picked)
    return HullWitness(FiniteDist(weights), tuple(z.gens[i] for i in picked))


def hull_union_split(space: ConvexSpace, z: HullWitness,
                     in_x: Callable[[Point], bool],
                     default_x: Point, default_y: Point) -> HullSplit:
    """Split a union-hull witness into an X part and a Y part.

    Generators failing in_x count as Y (the complement reading); the
    defaults witness nonemptiness of X and Y and are used only when
    the corresponding block carries zero mass.
    """
    xs = [i for i in range(z.n) if in_x(z.gens[i])]
    ys = [i for i in range(z.n) if i not in set(xs)]
    p = sum((z.dist[i] for i in xs), Fraction(0))
    return HullSplit(
        p=Prob(p),
        x=_sub_witness(z, xs, p, default_x),
        y=_sub_witness(z, ys, 1 - p, default_y),
    )


@dataclass(frozen=True)
class ConvexSetSpec:
    """A set given by a membership test plus a sampler of members."""

    name: str
    contains: Callable[[Point], bool]
    sample_member: PointSampler


def check_convex_set(space: ConvexSpace, spec: ConvexSetSpec,
                     seed: int = 0, cases: int = 500) -> LawReport:
    """Sampled members mix back into the set: conv(p, x, y) stays in it."""

    def case(rng: Rng, _i: int):
        p = rand_prob(rng)
        x, y = spec.sample_member(rng), spec.sample_member(rng)
        if not (spec.contains(x) and spec.contains(y)):
            return False, {"error": "sampler produced a non-member",
                           "x": space.format_point(x), "y": space.format_point(y)}
        z = space.conv(p, x, y)
        return spec.contains(z), {
            "p": str(p), "x": space.format_point(x), "y": space.format_point(y),
            "conv": space.format_point(z),
        }

    return LawReport((run_law(f"hull/convex-set-{spec.name}", seed, cases, case),))


def rand_witness(space: ConvexSpace, rng: Rng, max_arity: int = 8,
                 sampler: PointSampler | None = None) -> HullWitness:
    pt = sampler or space.sample_point
    n = rng.randint(1, max_arity)
    return HullWitness(rand_fdist(rng, n), tuple(pt(rng) for _ in range(n)))


def check_hull_reconstruction(space: ConvexSpace, seed: int = 0, cases: int = 500,
                              max_arity: int = 8,
                              sampler: PointSampler | None = None) -> LawReport:
    """hull_union_split reconstructs its input witness exactly.

    Every tenth case tags all generators X, and every tenth all Y,
    pinning the degenerate p = 1 and p = 0 branches; the counts land
    in the report meta.
    """
    pt = sampler or space.sample_point

    def case(rng: Rng, i: int):
        z = rand_witness(space, rng, max_arity, sampler)
        if i % 10 == 0:
            x_values = set(z.gens)
        elif i % 10 == 5:
            x_values = set()
        else:
            x_values = {g for g in z.gens if rng.random() < 0.5}
        default_x, default_y = pt(rng), pt(rng)
        split = hull_union_split(space, z, lambda g: g in x_values,
                                 default_x, default_y)
        lhs = space.conv(split.p, hull_eval(space, split.x), hull_eval(space, split.y))
        rhs = hull_eval(space, z)
        detail = {
            "weights": str(z.dist), "tagged_x": str(len(x_values)),
            "p": str(split.p),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }
        if all(g in x_values for g in z.gens):
            detail["_all_x_cases"] = "1"
        if not any(g in x_values for g in z.gens):
            detail["_all_y_cases"] = "1"
        return lhs == rhs, detail

    return LawReport((run_law("hull/union-split-reconstruction", seed, cases, case),))


def check_witness_mixture(space: ConvexSpace, seed: int = 0, cases: int = 500,
                          max_arity: int = 6,
                          sampler: PointSampler | None = None) -> LawReport:
    """Hulls are convex: the concatenated witness evaluates to the mixture."""

    def case(rng: Rng, _i: int):
        a = rand_witness(space, rng, max_arity, sampler)
        b = rand_witness(space, rng, max_arity, sampler)
        p = rand_prob(rng)
        lhs = hull_eval(space, mix_witnesses(p, a, b))
        rhs = space.conv(p, hull_eval(space, a), hull_eval(space, b))
        return lhs == rhs, {
            "p": str(p), "a_weights": str(a.dist), "b_weights": str(b.dist),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((run_law("hull/witness-mixture", seed, cases, case),))


def check_zero_weight_routing(space: ConvexSpace, seed: int = 0, cases: int = 500,
                              max_arity: int = 6,
                              sampler: PointSampler | None = None) -> LawReport:
    """Retagging a zero-weight generator never breaks the reconstruction."""
    pt = sampler or space.sample_point

    def case(rng: Rng, _i: int):
        n = rng.randint(2, max_arity)
        zero_at = rng.randrange(n)
        masses = [Fraction(rng.randint(0, 10)) for _ in range(n)]
        masses[zero_at] = Fraction(0)
        if all(m == 0 for m in masses):
            masses[(zero_at + 1) % n] = Fraction(1)
        d = FiniteDist.from_masses(masses)
        gens = tuple(pt(rng) for _ in range(n))
        z = HullWitness(d, gens)
        tags = {g for g in gens if rng.random() < 0.5}
        flipped = tags ^ {gens[zero_at]}
        default_x, default_y = pt(rng), pt(rng)
        target = hull_eval(space, z)
        results = []
        for x_values in (tags, flipped):
            split = hull_union_split(space, z, lambda g: g in x_values,
                                     default_x, default_y)
            results.append(space.conv(split.p, hull_eval(space, split.x),
                                      hull_eval(space, split.y)))
        ok = results[0] == target and results[1] == target
        return ok, {
            "weights": str(d), "zero_at": str(zero_at),
            "as_tagged": space.format_point(results[0]),
            "retagged": space.format_point(results[1]),
            "target": space.format_point(target),
        }

    return LawReport((run_law("hull/zero-weight-routing", seed, cases, case),))


def check_hull_laws(space: ConvexSpace, seed: int = 0, cases: int = 500,
                    max_arity: int = 8,
                    sampler: PointSampler | None = None) -> LawReport:
    return LawReport.merge([
        check_hull_reconstruction(space, seed, cases, max_arity, sampler),
        check_witness_mixture(space, seed, cases, min(max_arity, 6), sampler),
        check_zero_weight_routing(space, seed, cases, min(max_arity, 6), sampler),
    ])

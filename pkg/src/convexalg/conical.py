"""Scaled points: the conical envelope of a convex space.

Over any convex space X, the scaled points

    S_X = {Scaled(r, x) : r > 0, x in X} | {ZERO}

form a conical space (a semimodule over the nonnegative rationals,
here): commutative monoid under addpt, with scalept distributing over
it.  Addition merges weights and mixes the carried points,

    addpt(<r, x>, <q, y>) = <r + q, conv(r/(r+q), x, y)>,

so the embedding s1: x -> <1, x> turns convex combinations into sums
(check_s1_convn) and lets combination arguments be reassociated freely.
All thirteen signature items are checked: nine equational laws, plus
carrier closure, the zero element, and the two weight-homomorphism
equations standing in for the operation typings.

ZERO is its own constructor rather than a weight-0 pair; scalept by 0
collapses eagerly, keeping equality structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from .checking import (
    LawReport,
    Rng,
    rand_fdist,
    rand_nonneg_fraction,
    rand_positive_fraction,
    rand_prob,
    run_law,
)
from .errors import ArityMismatchError, NegativeScaleError, ParseError, ZeroPointError
from .fdist import FiniteDist
from .multiary import convn
from .rational import Prob, Rat, format_rational, parse_rational
from .spaces import ConvexSpace, Point, PointSampler, RatLine


class _Zero:
    """The additive unit of S_X; a singleton distinct from every pair."""

    _instance: "_Zero | None" = None

    def __new__(cls) -> "_Zero":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True)
class Scaled:
    """A pair <weight, point> with strictly positive weight."""

    weight: Rat
    point: Any

    def __post_init__(self) -> None:
        w = Fraction(self.weight)
        if w <= 0:
            raise NegativeScaleError(f"scaled weight must be > 0, got {w}")
        object.__setattr__(self, "weight", w)

    def __repr__(self) -> str:
        return f"Scaled({self.weight}, {self.point!r})"


ScaledPoint = Scaled | _Zero


def addpt(space: ConvexSpace, a: ScaledPoint, b: ScaledPoint) -> ScaledPoint:
    """Add scaled points over the given base space."""
    if a is ZERO:
        return b
    if b is ZERO:
        return a
    total = a.weight + b.weight
    return Scaled(total, space.conv(Prob(a.weight / total), a.point, b.point))


def scalept(c: Rat, a: ScaledPoint) -> ScaledPoint:
    """Scale a scaled point by a nonnegative coefficient."""
    c = Fraction(c)
    if c < 0:
        raise NegativeScaleError(f"cannot scale by {c}")
    if c == 0 or a is ZERO:
        return ZERO
    return Scaled(c * a.weight, a.point)


def s1(x: Point) -> Scaled:
    """Embed a base point with weight 1."""
    return Scaled(Fraction(1), x)


def weight(a: ScaledPoint) -> Rat:
    """Total mass: 0 for ZERO."""
    return Fraction(0) if a is ZERO else a.weight


def point_of(a: ScaledPoint) -> Point:
    """The carried point; ZERO has none."""
    if a is ZERO:
        raise ZeroPointError("ZERO carries no point")
    return a.point


def scaled_sum(space: ConvexSpace, terms: Sequence[ScaledPoint]) -> ScaledPoint:
    """Left fold of addpt from ZERO; order-independence is a checked law."""
    acc: ScaledPoint = ZERO
    for t in terms:
        acc = addpt(space, acc, t)
    return acc


def convpt(space: ConvexSpace, p: Prob, a: ScaledPoint, b: ScaledPoint) -> ScaledPoint:
    """p*a + (1-p)*b; the convex-space structure S_X inherits."""
    p = Prob(p)
    return addpt(space, scalept(p, a), scalept(1 - Fraction(p), b))


def scaleR(a: ScaledPoint) -> Rat:
    """Collapse a scaled rational point to its product; 0 for ZERO."""
    if a is ZERO:
        return Fraction(0)
    return a.weight * Fraction(a.point)


def avgn(e: FiniteDist, g: Sequence[Rat]) -> Rat:
    """Weighted average sum_i e_i * g_i; closed form of convn on rationals."""
    if len(g) != e.n:
        raise ArityMismatchError(f"{e.n} weights for {len(g)} values")
    return sum((w * Fraction(v) for w, v in zip(e.weights, g)), Fraction(0))


class ScaledSpace(ConvexSpace):
    """S_X as a convex space under convpt, over a base instance."""

    def __init__(self, base: ConvexSpace) -> None:
        self.base = base
        self.name = f"scaled-{base.name}"

    def conv(self, p: Prob, x: ScaledPoint, y: ScaledPoint) -> ScaledPoint:
        return convpt(self.base, p, x, y)

    def sample_point(self, rng: Rng) -> ScaledPoint:
        if rng.random() < 0.1:
            return ZERO
        return Scaled(rand_positive_fraction(rng), self.base.sample_point(rng))

    def format_point(self, x: ScaledPoint) -> str:
        if x is ZERO:
            return "ZERO"
        return f"{format_rational(x.weight)} *: {self.base.format_point(x.point)}"

    def point_to_json(self, x: ScaledPoint) -> Any:
        if x is ZERO:
            return {"zero": True}
        return {"weight": format_rational(x.weight),
                "point": self.base.point_to_json(x.point)}

    def point_from_json(self, data: Any) -> ScaledPoint:
        if not isinstance(data, dict):
            raise ParseError(f"expected a scaled-point object, got {data!r}")
        if data.get("zero"):
            return ZERO
        if "weight" not in data or "point" not in data:
            raise ParseError("scaled point needs 'weight' and 'point' (or 'zero')")
        return Scaled(parse_rational(data["weight"]),
                      self.base.point_from_json(data["point"]))


def _is_scaled_point(a: object) -> bool:
    return a is ZERO or (isinstance(a, Scaled) and isinstance(a.weight, Fraction)
                         and a.weight > 0)


def check_conical_laws(base: ConvexSpace, seed: int = 0, cases: int = 500,
                       sampler: PointSampler | None = None) -> LawReport:
    """All thirteen conical signature items over S_base, exactly.

    Nine equations, carrier closure for both operations, the zero
    element, and weight additivity/scaling (the homomorphism pair).
    """
    space = ScaledSpace(base)
    pt: Callable[[Rng], ScaledPoint]
    if sampler is None:
        pt = space.sample_point
    else:
        def pt(rng: Rng) -> ScaledPoint:
            if rng.random() < 0.1:
                return ZERO
            return Scaled(rand_positive_fraction(rng), sampler(rng))

    def fmt(a: ScaledPoint) -> str:
        return space.format_point(a)

    def eq_case(law_args: Callable[[Rng], tuple[dict[str, str], ScaledPoint, ScaledPoint]]):
        def case(rng: Rng, _i: int):
            inputs, lhs, rhs = law_args(rng)
            return lhs == rhs, {**inputs, "lhs": fmt(lhs), "rhs": fmt(rhs)}
        return case

    def add_assoc(rng: Rng):
        a, b, c = pt(rng), pt(rng), pt(rng)
        return ({"a": fmt(a), "b": fmt(b), "c": fmt(c)},
                addpt(base, a, addpt(base, b, c)),
                addpt(base, addpt(base, a, b), c))

    def add_comm(rng: Rng):
        a, b = pt(rng), pt(rng)
        return ({"a": fmt(a), "b": fmt(b)},
                addpt(base, a, b), addpt(base, b, a))

    def scale_assoc(rng: Rng):
        c, d, a = rand_nonneg_fraction(rng), rand_nonneg_fraction(rng), pt(rng)
        return ({"c": str(c), "d": str(d), "a": fmt(a)},
                scalept(c, scalept(d, a)), scalept(c * d, a))

    def left_distrib(rng: Rng):
        c, d, a = rand_nonneg_fraction(rng), rand_nonneg_fraction(rng), pt(rng)
        return ({"c": str(c), "d": str(d), "a": fmt(a)},
                scalept(c + d, a),
                addpt(base, scalept(c, a), scalept(d, a)))

    def right_distrib(rng: Rng):
        c, a, b = rand_nonneg_fraction(rng), pt(rng), pt(rng)
        return ({"c": str(c), "a": fmt(a), "b": fmt(b)},
                scalept(c, addpt(base, a, b)),
                addpt(base, scalept(c, a), scalept(c, b)))

    def add_zero(rng: Rng):
        a = pt(rng)
        return ({"a": fmt(a)}, addpt(base, ZERO, a), a)

    def scale_zero_left(rng: Rng):
        a = pt(rng)
        return ({"a": fmt(a)}, scalept(Fraction(0), a), ZERO)

    def scale_zero_right(rng: Rng):
        c = rand_nonneg_fraction(rng)
        return ({"c": str(c)}, scalept(c, ZERO), ZERO)

    def scale_one(rng: Rng):
        a = pt(rng)
        return ({"a": fmt(a)}, scalept(Fraction(1), a), a)

    def carrier_case(rng: Rng, _i: int):
        a, b, c = pt(rng), pt(rng), rand_nonneg_fraction(rng)
        added = addpt(base, a, b)
        scaled = scalept(c, a)
        ok = _is_scaled_point(added) and _is_scaled_point(scaled)
        return ok, {"a": fmt(a), "b": fmt(b), "c": str(c),
                    "a+b": fmt(added), "c*a": fmt(scaled)}

    def zero_element_case(rng: Rng, _i: int):
        a = pt(rng)
        try:
            point_of(ZERO)
            return False, {"error": "point_of(ZERO) did not raise"}
        except ZeroPointError:
            pass
        ok = weight(ZERO) == 0 and _is_scaled_point(ZERO) and (addpt(base, a, ZERO) == a)
        return ok, {"a": fmt(a), "weight(ZERO)": str(weight(ZERO))}

    def weight_additive(rng: Rng, _i: int):
        a, b = pt(rng), pt(rng)
        lhs = weight(addpt(base, a, b))
        rhs = weight(a) + weight(b)
        return lhs == rhs, {"a": fmt(a), "b": fmt(b), "lhs": str(lhs), "rhs": str(rhs)}

    def weight_scaling(rng: Rng, _i: int):
        c, a = rand_nonneg_fraction(rng), pt(rng)
        lhs = weight(scalept(c, a))
        rhs = c * weight(a)
        return lhs == rhs, {"c": str(c), "a": fmt(a), "lhs": str(lhs), "rhs": str(rhs)}

    return LawReport((
        run_law("conical/add-associativity", seed, cases, eq_case(add_assoc)),
        run_law("conical/add-commutativity", seed, cases, eq_case(add_comm)),
        run_law("conical/scale-associativity", seed, cases, eq_case(scale_assoc)),
        run_law("conical/left-distributivity", seed, cases, eq_case(left_distrib)),
        run_law("conical/right-distributivity", seed, cases, eq_case(right_distrib)),
        run_law("conical/add-zero", seed, cases, eq_case(add_zero)),
        run_law("conical/scale-zero-left", seed, cases, eq_case(scale_zero_left)),
        run_law("conical/scale-zero-right", seed, cases, eq_case(scale_zero_right)),
        run_law("conical/scale-one", seed, cases, eq_case(scale_one)),
        run_law("conical/carrier-closure", seed, cases, carrier_case),
        run_law("conical/zero-element", seed, cases, zero_element_case),
        run_law("conical/weight-additive", seed, cases, weight_additive),
        run_law("conical/weight-scaling", seed, cases, weight_scaling),
    ))


def check_s1_convn(base: ConvexSpace, seed: int = 0, cases: int = 500,
                   max_n: int = 6, sampler: PointSampler | None = None) -> LawReport:
    """s1 maps convn to a conical sum, and conv to convpt.

    s1(convn(d, x)) = sum_i scalept(d_i, s1(x_i)), plus the binary
    special case s1(conv(p, x, y)) = convpt(p, s1(x), s1(y)).
    """
    space = ScaledSpace(base)
    pt = sampler or base.sample_point

    def convn_case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        d = rand_fdist(rng, n)
        xs = [pt(rng) for _ in range(n)]
        lhs = s1(convn(base, d, xs))
        rhs = scaled_sum(base, [scalept(w, s1(x)) for w, x in zip(d.weights, xs)])
        return lhs == rhs, {
            "d": str(d),
            "x": "[" + ", ".join(base.format_point(x) for x in xs) + "]",
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    def binary_case(rng: Rng, _i: int):
        p = rand_prob(rng)
        x, y = pt(rng), pt(rng)
        lhs = s1(base.conv(p, x, y))
        rhs = convpt(base, p, s1(x), s1(y))
        return lhs == rhs, {
            "p": str(p), "x": base.format_point(x), "y": base.format_point(y),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((
        run_law("conical/s1-convn", seed, cases, convn_case),
        run_law("conical/s1-binary", seed, cases, binary_case),
    ))


def check_entropic_identity(space: ConvexSpace, seed: int = 0, cases: int = 500,
                  sampler: PointSampler | None = None) -> LawReport:
    """The entropic identity: swapping the mixing order of a 2x2 block.

    conv(p, conv(q,a,b), conv(q,c,d)) = conv(q, conv(p,a,c), conv(p,b,d)).
    """
    pt = sampler or space.sample_point

    def case(rng: Rng, _i: int):
        p, q = rand_prob(rng), rand_prob(rng)
        a, b, c, d = pt(rng), pt(rng), pt(rng), pt(rng)
        lhs = space.conv(p, space.conv(q, a, b), space.conv(q, c, d))
        rhs = space.conv(q, space.conv(p, a, c), space.conv(p, b, d))
        return lhs == rhs, {
            "p": str(p), "q": str(q),
            "a": space.format_point(a), "b": space.format_point(b),
            "c": space.format_point(c), "d": space.format_point(d),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((run_law("binary/entropic-identity", seed, cases, case),))


def check_avgn(seed: int = 0, cases: int = 500, max_n: int = 6) -> LawReport:
    """convn on the rational line equals the closed-form weighted sum."""
    line = RatLine()

    def case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        e = rand_fdist(rng, n)
        g = [line.sample_point(rng) for _ in range(n)]
        lhs = convn(line, e, g)
        rhs = avgn(e, g)
        return lhs == rhs, {
            "e": str(e), "g": str([str(v) for v in g]),
            "lhs": str(lhs), "rhs": str(rhs),
        }

    return LawReport((run_law("conical/avgn-closed-form", seed, cases, case),))


def check_scaler(seed: int = 0, cases: int = 500) -> LawReport:
    """scaleR is additive and scaling-compatible on scaled rationals."""
    space = ScaledSpace(RatLine())

    def additive_case(rng: Rng, _i: int):
        a, b = space.sample_point(rng), space.sample_point(rng)
        lhs = scaleR(addpt(space.base, a, b))
        rhs = scaleR(a) + scaleR(b)
        return lhs == rhs, {"a": space.format_point(a), "b": space.format_point(b),
                            "lhs": str(lhs), "rhs": str(rhs)}

    def scaling_case(rng: Rng, _i: int):
        c, a = rand_nonneg_fraction(rng), space.sample_point(rng)
        lhs = scaleR(scalept(c, a))
        rhs = c * scaleR(a)
        return lhs == rhs, {"c": str(c), "a": space.format_point(a),
                            "lhs": str(lhs), "rhs": str(rhs)}

    return LawReport((
        run_law("conical/scaler-additive", seed, cases, additive_case),
        run_law("conical/scaler-scaling", seed, cases, scaling_case),
    ))

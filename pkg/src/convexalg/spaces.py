"""Binary convex spaces: the interface, the shipped instances, and the
checker for the four binary axioms.

A space is an object that knows how to mix two of its points, sample a
point, and encode points for reports and JSON I/O.  Points themselves
are plain immutable values (Fraction, tuple, FiniteDist, DominatedPair)
compared with structural equality, so every law check is an exact
equality test.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .checking import (
    LawReport,
    Rng,
    rand_fdist,
    rand_fraction,
    rand_prob,
    run_law,
)
from .errors import DimensionMismatchError, NotDominatedError
from .fdist import FiniteDist
from .rational import Prob, Rat, format_rational, parse_rational, r_of, s_of

Point = Any
PointSampler = Callable[[Rng], Point]


class ConvexSpace(ABC):
    """A carrier with mixing operations conv(p, x, y), p in [0, 1].

    Contracts (checked by check_binary_laws, exact equality):
      unit                 conv(1, x, y) = x
      idempotence          conv(p, x, x) = x
      skewed commutativity conv(1-p, x, y) = conv(p, y, x)
      quasi-associativity  conv(p, x, conv(q, y, z))
                             = conv(s, conv(r, x, y), z)
                           with s = s_of(p, q), r = r_of(p, q)
    """

    name: str = "convex-space"

    @abstractmethod
    def conv(self, p: Prob, x: Point, y: Point) -> Point:
        """The mixture of x and y at index p."""

    @abstractmethod
    def sample_point(self, rng: Rng) -> Point:
        """Draw a valid point; used by the law checkers."""

    def format_point(self, x: Point) -> str:
        return json.dumps(self.point_to_json(x))

    def point_to_json(self, x: Point):
        raise NotImplementedError(f"{self.name} has no JSON point encoding")

    def point_from_json(self, obj) -> Point:
        raise NotImplementedError(f"{self.name} has no JSON point encoding")

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


class RatLine(ConvexSpace):
    """The rational line: conv(p, a, b) = p*a + (1-p)*b."""

    name = "rat"

    def conv(self, p: Prob, x: Rat, y: Rat) -> Rat:
        return p * x + (1 - p) * y

    def sample_point(self, rng: Rng) -> Rat:
        return rand_fraction(rng)

    def format_point(self, x: Rat) -> str:
        return format_rational(x)

    def point_to_json(self, x: Rat) -> str:
        return format_rational(x)

    def point_from_json(self, obj) -> Rat:
        return parse_rational(str(obj))


class RatVectorSpace(ConvexSpace):
    """Fixed-dimension rational vectors mixed coordinatewise."""

    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.dim = dim
        self.name = f"vec{dim}"

    def conv(self, p: Prob, x: tuple[Rat, ...], y: tuple[Rat, ...]) -> tuple[Rat, ...]:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError(
                f"expected dimension {self.dim}, got {len(x)} and {len(y)}"
            )
        q = 1 - p
        return tuple(p * xi + q * yi for xi, yi in zip(x, y))

    def sample_point(self, rng: Rng) -> tuple[Rat, ...]:
        return tuple(rand_fraction(rng) for _ in range(self.dim))

    def format_point(self, x: tuple[Rat, ...]) -> str:
        return "(" + ", ".join(format_rational(c) for c in x) + ")"

    def point_to_json(self, x: tuple[Rat, ...]) -> dict:
        return {"coords": [format_rational(c) for c in x]}

    def point_from_json(self, obj) -> tuple[Rat, ...]:
        coords = obj["coords"] if isinstance(obj, dict) else obj
        x = tuple(parse_rational(str(c)) for c in coords)
        if len(x) != self.dim:
            raise DimensionMismatchError(f"expected dimension {self.dim}, got {len(x)}")
        return x


class DistSpace(ConvexSpace):
    """Distributions over a fixed alphabet, mixed pointwise."""

    def __init__(self, alphabet: int):
        if alphabet < 1:
            raise ValueError("alphabet size must be >= 1")
        self.alphabet = alphabet
        self.name = f"fdist{alphabet}"

    def conv(self, p: Prob, x: FiniteDist, y: FiniteDist) -> FiniteDist:
        if x.n != self.alphabet or y.n != self.alphabet:
            raise DimensionMismatchError(
                f"expected alphabet {self.alphabet}, got {x.n} and {y.n}"
            )
        q = 1 - p
        return FiniteDist(tuple(p * xi + q * yi for xi, yi in zip(x, y)))

    def sample_point(self, rng: Rng) -> FiniteDist:
        return rand_fdist(rng, self.alphabet)

    def format_point(self, x: FiniteDist) -> str:
        return str(x)

    def point_to_json(self, x: FiniteDist) -> dict:
        return x.to_json()

    def point_from_json(self, obj) -> FiniteDist:
        d = FiniteDist.from_json(obj)
        if d.n != self.alphabet:
            raise DimensionMismatchError(f"expected alphabet {self.alphabet}, got {d.n}")
        return d


def dominates(q: FiniteDist, p: FiniteDist) -> bool:
    """True iff q(a) = 0 implies p(a) = 0 for every letter a."""
    if q.n != p.n:
        raise DimensionMismatchError(f"alphabets differ: {q.n} vs {p.n}")
    return all(pw == 0 for qw, pw in zip(q, p) if qw == 0)


@dataclass(frozen=True)
class DominatedPair:
    """A pair (P, Q) with Q dominating P; rejected eagerly otherwise."""

    P: FiniteDist
    Q: FiniteDist

    def __post_init__(self) -> None:
        if not dominates(self.Q, self.P):
            raise NotDominatedError(f"Q = {self.Q} does not dominate P = {self.P}")

    def __str__(self) -> str:
        return f"(P={self.P}, Q={self.Q})"


class DominatedPairSpace(ConvexSpace):
    """Dominated pairs mixed componentwise; mixing preserves dominance."""

    def __init__(self, alphabet: int):
        self.alphabet = alphabet
        self.base = DistSpace(alphabet)
        self.name = f"dompair{alphabet}"

    def conv(self, p: Prob, x: DominatedPair, y: DominatedPair) -> DominatedPair:
        return DominatedPair(
            self.base.conv(p, x.P, y.P),
            self.base.conv(p, x.Q, y.Q),
        )

    def sample_point(self, rng: Rng) -> DominatedPair:
        return rand_dominated_pair(rng, self.alphabet)

    def format_point(self, x: DominatedPair) -> str:
        return str(x)

    def point_to_json(self, x: DominatedPair) -> dict:
        return {"P": x.P.to_json(), "Q": x.Q.to_json()}

    def point_from_json(self, obj) -> DominatedPair:
        return DominatedPair(FiniteDist.from_json(obj["P"]), FiniteDist.from_json(obj["Q"]))


def rand_dominated_pair(rng: Rng, alphabet: int) -> DominatedPair:
    """Sample Q with a random nonempty support, then P supported within it."""
    support = [i for i in range(alphabet) if rng.random() < 0.8]
    if not support:
        support = [rng.randrange(alphabet)]
    q_masses = [0] * alphabet
    p_masses = [0] * alphabet
    for i in support:
        q_masses[i] = rng.randint(1, 10)
        p_masses[i] = rng.randint(0, 10)
    if sum(p_masses) == 0:
        p_masses[support[0]] = 1
    return DominatedPair(FiniteDist.from_masses(p_masses), FiniteDist.from_masses(q_masses))


class FirstProjectionLine(RatLine):
    """Mutant: conv always returns its left argument.

    Unit, idempotence, and quasi-associativity survive; skewed
    commutativity does not.  Shipped to show the checkers detect broken
    instances (CLI name: broken-demo).
    """

    name = "broken-demo"

    def conv(self, p: Prob, x: Rat, y: Rat) -> Rat:
        return x


def check_binary_laws(space: ConvexSpace, seed: int = 0, cases: int = 500,
                      sampler: PointSampler | None = None) -> LawReport:
    """Check the four binary axioms on seeded samples, exact equality."""
    pt = sampler or space.sample_point
    fmt = space.format_point

    def unit(rng: Rng, _i: int):
        x, y = pt(rng), pt(rng)
        lhs = space.conv(Prob(1), x, y)
        return lhs == x, {"x": fmt(x), "y": fmt(y), "lhs": fmt(lhs), "rhs": fmt(x)}

    def idem(rng: Rng, _i: int):
        p, x = rand_prob(rng), pt(rng)
        lhs = space.conv(p, x, x)
        return lhs == x, {"p": str(p), "x": fmt(x), "lhs": fmt(lhs), "rhs": fmt(x)}

    def skew(rng: Rng, _i: int):
        p, x, y = rand_prob(rng), pt(rng), pt(rng)
        lhs = space.conv(Prob(1 - p), x, y)
        rhs = space.conv(p, y, x)
        return lhs == rhs, {
            "p": str(p), "x": fmt(x), "y": fmt(y), "lhs": fmt(lhs), "rhs": fmt(rhs),
        }

    def quasi(rng: Rng, _i: int):
        p, q = rand_prob(rng), rand_prob(rng)
        x, y, z = pt(rng), pt(rng), pt(rng)
        lhs = space.conv(p, x, space.conv(q, y, z))
        rhs = space.conv(s_of(p, q), space.conv(r_of(p, q), x, y), z)
        return lhs == rhs, {
            "p": str(p), "q": str(q),
            "x": fmt(x), "y": fmt(y), "z": fmt(z),
            "s": str(s_of(p, q)), "r": str(r_of(p, q)),
            "lhs": fmt(lhs), "rhs": fmt(rhs),
        }

    return LawReport((
        run_law("binary/unit", seed, cases, unit),
        run_law("binary/idempotence", seed, cases, idem),
        run_law("binary/skewed-commutativity", seed, cases, skew),
        run_law("binary/quasi-associativity", seed, cases, quasi),
    ))

"""Finite probability distributions over index sets {0..n-1}, and the
index machinery (maps, permutations, stochastic matrices) that the
multiary laws quantify over.

Weights are exact rationals: nonnegative and summing to exactly 1,
validated on every construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import ArityMismatchError, InvalidDistributionError
from .rational import Rat, format_rational, parse_rational


@dataclass(frozen=True)
class FiniteDist:
    """A distribution d over I_n: d_i >= 0 and sum_i d_i = 1."""

    weights: tuple[Rat, ...]

    def __post_init__(self) -> None:
        ws = tuple(Fraction(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if not ws:
            raise InvalidDistributionError("a distribution needs arity >= 1")
        if any(w < 0 for w in ws):
            raise InvalidDistributionError(f"negative weight in {self._brackets(ws)}")
        total = sum(ws)
        if total != 1:
            raise InvalidDistributionError(
                f"weights sum to {format_rational(total)}, expected 1"
            )

    @staticmethod
    def _brackets(ws: Iterable[Rat]) -> str:
        return "[" + ", ".join(format_rational(w) for w in ws) + "]"

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> Rat:
        return self.weights[i]

    def __iter__(self) -> Iterator[Rat]:
        return iter(self.weights)

    def __str__(self) -> str:
        return self._brackets(self.weights)

    def support(self) -> tuple[int, ...]:
        """Indices with strictly positive weight."""
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @classmethod
    def from_masses(cls, masses: Sequence[int | Rat]) -> "FiniteDist":
        """Normalize nonnegative masses (not all zero) to a distribution."""
        ms = [Fraction(m) for m in masses]
        total = sum(ms)
        if total <= 0:
            raise InvalidDistributionError("masses must have positive total")
        return cls(tuple(m / total for m in ms))

    @classmethod
    def point_mass(cls, n: int, j: int) -> "FiniteDist":
        if not 0 <= j < n:
            raise ArityMismatchError(f"index {j} out of range for arity {n}")
        return cls(tuple(Fraction(1 if i == j else 0) for i in range(n)))

    @classmethod
    def uniform(cls, n: int) -> "FiniteDist":
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    def to_json(self) -> dict:
        return {"weights": [format_rational(w) for w in self.weights]}

    @classmethod
    def from_json(cls, obj: dict | Sequence[str]) -> "FiniteDist":
        raw = obj["weights"] if isinstance(obj, dict) else obj
        return cls(tuple(parse_rational(str(w)) for w in raw))


@dataclass(frozen=True)
class StochasticMatrix:
    """n rows, each a FiniteDist of common arity m (the e_{i,j} family)."""

    rows: tuple[FiniteDist, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise InvalidDistributionError("a stochastic matrix needs n >= 1 rows")
        m = self.rows[0].n
        if any(row.n != m for row in self.rows):
            raise ArityMismatchError("rows must share one arity")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self.rows[0].n

    def __getitem__(self, i: int) -> FiniteDist:
        return self.rows[i]

    def to_json(self) -> dict:
        return {"rows": [[format_rational(w) for w in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "StochasticMatrix":
        return cls(tuple(FiniteDist.from_json(r) for r in obj["rows"]))


@dataclass(frozen=True)
class IndexMap:
    """A function I_source -> I_target stored as a table.

    Serves both as the u of the map laws and as the block-assignment map
    of the partition law (structurally identical roles).
    """

    target: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if not all(0 <= v < self.target for v in self.table):
            raise ArityMismatchError(
                f"map values {self.table} not all below target {self.target}"
            )

    @property
    def source(self) -> int:
        return len(self.table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


@dataclass(frozen=True)
class Permutation:
    """A bijection on I_n, stored as the image table."""

    table: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))
        if sorted(self.table) != list(range(len(self.table))):
            raise ArityMismatchError(f"{self.table} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, i: int) -> int:
        return self.table[i]


def mix_rows(d: FiniteDist, e: StochasticMatrix) -> FiniteDist:
    """The mixed distribution of the barycenter law: w_j = sum_i d_i * e_{i,j}."""
    if d.n != e.n:
        raise ArityMismatchError(f"distribution arity {d.n} != matrix rows {e.n}")
    return FiniteDist(
        tuple(sum((d[i] * e[i][j] for i in range(d.n)), Fraction(0)) for j in range(e.m))
    )


def pushforward(d: FiniteDist, u: IndexMap) -> FiniteDist:
    """The image distribution u_*d: w_j = sum over u(i) = j of d_i."""
    if d.n != u.source:
        raise ArityMismatchError(f"distribution arity {d.n} != map source {u.source}")
    ws = [Fraction(0)] * u.target
    for i, w in enumerate(d):
        ws[u(i)] += w
    return FiniteDist(tuple(ws))


def rho_dist(lam: FiniteDist, assign: IndexMap) -> FiniteDist:
    """Block masses rho_j = sum of lam over block j; equals the pushforward."""
    return pushforward(lam, assign)


def partition_inner(j: int, lam: FiniteDist, assign: IndexMap) -> FiniteDist:
    """The j-th inner distribution of the partition law.

    k maps to lam_k / rho_j inside block j and 0 elsewhere; a zero-mass
    block falls back to the uniform distribution over the full index set.
    """
    if lam.n != assign.source:
        raise ArityMismatchError(f"distribution arity {lam.n} != map source {assign.source}")
    if not 0 <= j < assign.target:
        raise ArityMismatchError(f"block index {j} out of range for target {assign.target}")
    rho_j = sum((lam[k] for k in range(lam.n) if assign(k) == j), Fraction(0))
    if rho_j == 0:
        return FiniteDist.uniform(lam.n)
    return FiniteDist(
        tuple(lam[k] / rho_j if assign(k) == j else Fraction(0) for k in range(lam.n))
    )


def permute_dist(d: FiniteDist, s: Permutation) -> FiniteDist:
    """The reindexed distribution (d o s)_i = d_{s(i)}."""
    if d.n != s.n:
        raise ArityMismatchError(f"distribution arity {d.n} != permutation size {s.n}")
    return FiniteDist(tuple(d[s(i)] for i in range(d.n)))

"""Seeded randomized law checking: case runners, reports, and samplers.

Checkers are the product here, so the machinery is deliberately plain:
a law is a function from a seeded RNG to (ok, detail), run for a fixed
number of cases.  Reports record the pass count and the first
counterexample verbatim, so any failure is replayable from the seed,
the law name, and the case index.

Sampling policy (documented, deterministic given the seed):
  - probabilities: numerator/denominator with denominator <= 64, with
    the boundary values 0, 1 and the midpoint 1/2 boosted;
  - scalar points: fractions with |numerator| <= 16, denominator <= 16;
  - distribution weights: integer masses 0..10, normalized exactly;
  - arities: small (callers cap them, typically <= 6).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import ConvexAlgError
from .fdist import FiniteDist, IndexMap, Permutation, StochasticMatrix
from .rational import Prob, Rat

Rng = random.Random

# case_fn(rng, case_index) -> (ok, detail); detail values are strings.
CaseFn = Callable[[Rng, int], tuple[bool, dict[str, str]]]


@dataclass(frozen=True)
class Counterexample:
    case: int
    detail: Mapping[str, str]

    def to_json(self) -> dict:
        return {"case": self.case, **dict(self.detail)}


@dataclass(frozen=True)
class LawResult:
    law: str
    cases: int
    failures: int
    counterexample: Counterexample | None = None
    meta: Mapping[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out: dict = {
            "law": self.law,
            "cases": self.cases,
            "failures": self.failures,
            "pass": self.passed,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }
        if self.meta:
            out["meta"] = dict(sorted(self.meta.items()))
        return out


@dataclass(frozen=True)
class LawReport:
    results: tuple[LawResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __iter__(self):
        return iter(self.results)

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def to_json(self) -> dict:
        return {"ok": self.ok, "laws": [r.to_json() for r in self.results]}

    @staticmethod
    def merge(parts: Iterable["LawReport | LawResult"]) -> "LawReport":
        results: list[LawResult] = []
        for part in parts:
            if isinstance(part, LawResult):
                results.append(part)
            else:
                results.extend(part.results)
        return LawReport(tuple(results))


def law_rng(seed: int, law: str, case: int) -> Rng:
    """A fresh RNG for one case, so failures replay in isolation."""
    return random.Random(f"{seed}:{law}:{case}")


def run_law(law: str, seed: int, cases: int, case_fn: CaseFn,
            meta: Mapping[str, int] | None = None) -> LawResult:
    """Run case_fn for the given number of cases, catching library errors.

    An exception during a case counts as a failure and lands in the
    counterexample detail, so crash-style mutants are flagged rather
    than aborting the whole report.
    """
    if cases < 1:
        raise ValueError("cases must be >= 1")
    failures = 0
    first: Counterexample | None = None
    counters: dict[str, int] = dict(meta or {})
    for i in range(cases):
        rng = law_rng(seed, law, i)
        try:
            ok, detail = case_fn(rng, i)
        except (ConvexAlgError, ZeroDivisionError) as exc:
            ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
        # detail keys starting with "_" are counter markers, not case data
        for key in [k for k in detail if k.startswith("_")]:
            detail.pop(key)
            counters[key[1:]] = counters.get(key[1:], 0) + 1
        if not ok:
            failures += 1
            if first is None:
                first = Counterexample(case=i, detail=dict(detail))
    return LawResult(law=law, cases=cases, failures=failures,
                     counterexample=first, meta=counters)


# --------------------------------------------------------------------------
# samplers


def rand_prob(rng: Rng, max_den: int = 64) -> Prob:
    """A random probability; boundary-heavy on purpose."""
    roll = rng.random()
    if roll < 0.04:
        return Prob(0)
    if roll < 0.08:
        return Prob(1)
    if roll < 0.12:
        return Prob(1, 2)
    den = rng.randint(1, max_den)
    return Prob(rng.randint(0, den), den)


def rand_fraction(rng: Rng, max_num: int = 16, max_den: int = 16) -> Rat:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_positive_fraction(rng: Rng, max_num: int = 12, max_den: int = 12) -> Rat:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def rand_nonneg_fraction(rng: Rng, max_num: int = 12, max_den: int = 12) -> Rat:
    if rng.random() < 0.15:
        return Fraction(0)
    return rand_positive_fraction(rng, max_num, max_den)


def rand_fdist(rng: Rng, n: int, max_mass: int = 10) -> FiniteDist:
    """Integer masses normalized exactly; zero entries are common."""
    masses = [rng.randint(0, max_mass) for _ in range(n)]
    if sum(masses) == 0:
        masses[rng.randrange(n)] = 1
    return FiniteDist.from_masses(masses)


def rand_full_support_fdist(rng: Rng, n: int, max_mass: int = 10) -> FiniteDist:
    return FiniteDist.from_masses([rng.randint(1, max_mass) for _ in range(n)])


def rand_stochastic_matrix(rng: Rng, n: int, m: int) -> StochasticMatrix:
    return StochasticMatrix(tuple(rand_fdist(rng, m) for _ in range(n)))


def rand_disjoint_rows_matrix(rng: Rng, n: int, m: int) -> StochasticMatrix:
    """Rows with pairwise disjoint supports; requires m >= n."""
    if m < n:
        raise ValueError("need at least one column per row")
    columns = list(range(m))
    rng.shuffle(columns)
    blocks: list[list[int]] = [[columns[i]] for i in range(n)]
    for col in columns[n:]:
        blocks[rng.randrange(n)].append(col)
    rows = []
    for block in blocks:
        masses = [0] * m
        for col in block:
            masses[col] = rng.randint(0, 10)
        if sum(masses) == 0:
            masses[block[0]] = 1
        rows.append(FiniteDist.from_masses(masses))
    return StochasticMatrix(tuple(rows))


def rand_index_map(rng: Rng, source: int, target: int) -> IndexMap:
    return IndexMap(target, tuple(rng.randrange(target) for _ in range(source)))


def rand_injection(rng: Rng, source: int, target: int) -> IndexMap:
    if source > target:
        raise ValueError("no injection from a larger set")
    return IndexMap(target, tuple(rng.sample(range(target), source)))


def rand_permutation(rng: Rng, n: int) -> Permutation:
    table = list(range(n))
    rng.shuffle(table)
    return Permutation(tuple(table))


def rand_points(rng: Rng, sampler: Callable[[Rng], object], k: int) -> list:
    return [sampler(rng) for _ in range(k)]

"""Convexity of real functions and divergence of finite distributions.

The rational modules check laws by exact equality; this one leaves ℚ.
Floats carry the usual total order, making them the prototype ordered
convex space, and convexity of f means

    f(p*x + (1-p)*y) <= p*f(x) + (1-p)*f(y)

up to an additive slack (default 1e-9).  Concavity is checked through
the negation duality: f is concave iff -f is convex.

Logarithms are base 2 throughout (the information-theoretic reading;
pass base=math.e where a natural log is wanted) and are extended by
log(x) = 0 for x <= 0, so every catalog function is total.  Convexity
claims are then restricted to sampled subintervals, not the whole line;
the extension makes the 0 boundary an intentional counterexample, not
an error.

The finite-difference second-derivative test is evidence, not proof:
it reports the sign of (f(x+h) - 2 f(x) + f(x-h)) / h^2 on a grid,
with a step and tolerance scaled to survive cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .checking import LawReport, Rng, rand_prob, run_law
from .errors import (
    ArityMismatchError,
    DegenerateIntervalError,
    NotDominatedError,
    UnknownFunctionError,
)
from .fdist import FiniteDist
from .spaces import DominatedPair, DominatedPairSpace, dominates, rand_dominated_pair

_EPS = math.ulp(1.0)
_REL_STEP = _EPS ** 0.25


def real_str(x: float) -> str:
    """Report format for floats: decimal, 17 significant digits."""
    return f"{x:.17g}"


@dataclass(frozen=True)
class Tolerance:
    """Additive slack for floating-point inequalities."""

    slack: float = 1e-9

    def __post_init__(self) -> None:
        if self.slack < 0:
            raise ValueError(f"slack must be >= 0, got {self.slack}")


@dataclass(frozen=True)
class RealFn:
    """A named total function on floats, from the built-in catalog."""

    name: str
    fn: Callable[[float], float]

    def __call__(self, x: float) -> float:
        return self.fn(x)


def log_ext(x: float, base: float = 2.0) -> float:
    """Logarithm extended by 0 on x <= 0, so it is total."""
    if x <= 0:
        return 0.0
    if base == 2.0:
        return math.log2(x)
    return math.log(x, base)


def _xlogx(x: float) -> float:
    return x * math.log2(x) if x > 0 else 0.0


FUNCTIONS: dict[str, RealFn] = {
    fn.name: fn
    for fn in (
        RealFn("log_ext", log_ext),
        RealFn("ln_ext", lambda x: log_ext(x, math.e)),
        RealFn("neg_log_ext", lambda x: -log_ext(x)),
        RealFn("square", lambda x: x * x),
        RealFn("abs", abs),
        RealFn("xlogx", _xlogx),
        RealFn("exp", math.exp),
        RealFn("linear", lambda x: 2.0 * x + 1.0),
        RealFn("sin", math.sin),
    )
}


def get_function(name: str) -> RealFn:
    try:
        return FUNCTIONS[name]
    except KeyError:
        known = ", ".join(sorted(FUNCTIONS))
        raise UnknownFunctionError(f"unknown function {name!r}; known: {known}") from None


def float_conv(p: float, x: float, y: float) -> float:
    return p * x + (1.0 - p) * y


def convex_at(f: Callable[[float], float], p: float, x: float, y: float,
              tol: Tolerance = Tolerance()) -> bool:
    """f(px + (1-p)y) <= p f(x) + (1-p) f(y), up to slack."""
    return f(float_conv(p, x, y)) <= float_conv(p, f(x), f(y)) + tol.slack


def concave_at(f: Callable[[float], float], p: float, x: float, y: float,
               tol: Tolerance = Tolerance()) -> bool:
    return convex_at(lambda t: -f(t), p, x, y, tol)


def _domain_sampler(domain) -> Callable[[Rng], float]:
    """Accept an (lo, hi) interval or a ready-made rng -> float sampler."""
    if callable(domain):
        return domain
    lo, hi = float(domain[0]), float(domain[1])
    if not (lo < hi) or math.isinf(lo) or math.isinf(hi):
        raise DegenerateIntervalError(f"bad interval [{lo}, {hi}]")
    if lo > 0 and hi / lo > 1e3:
        # wide positive interval: sample log-uniformly so both ends matter
        llo, lhi = math.log(lo), math.log(hi)
        return lambda rng: math.exp(rng.uniform(llo, lhi))
    return lambda rng: rng.uniform(lo, hi)


def _rand_p(rng: Rng) -> float:
    r = rng.random()
    if r < 0.02:
        return 0.0
    if r < 0.04:
        return 1.0
    return rng.random()


def check_convex_in(f: RealFn, domain, seed: int = 0, cases: int = 10_000,
                    tol: Tolerance = Tolerance(), mode: str = "convex") -> LawReport:
    """Sample (p, x, y) in the domain and test the convexity inequality.

    mode "concave" flips the inequality via the negation duality; a
    violation beyond slack becomes the counterexample.
    """
    if mode not in ("convex", "concave"):
        raise ValueError(f"mode must be convex or concave, got {mode!r}")
    sample = _domain_sampler(domain)
    at = convex_at if mode == "convex" else concave_at

    def case(rng: Rng, _i: int):
        p = _rand_p(rng)
        x, y = sample(rng), sample(rng)
        mix = float_conv(p, x, y)
        return at(f, p, x, y, tol), {
            "p": real_str(p), "x": real_str(x), "y": real_str(y),
            "f(mix)": real_str(f(mix)),
            "mixed_f": real_str(float_conv(p, f(x), f(y))),
        }

    return LawReport((run_law(f"analysis/{mode}/{f.name}", seed, cases, case),))


def second_derivative_test(f: RealFn, interval: tuple[float, float],
                           grid_points: int = 1000,
                           tol: Tolerance = Tolerance(),
                           mode: str = "convex",
                           spacing: str = "auto") -> LawReport:
    """Check the sign of a central second difference on a grid.

    Sufficient evidence, not proof: a nonnegative second derivative
    means convex, but the difference quotient at relative step
    eps^(1/4) only resolves signs larger than the cancellation noise,
    so the comparison gets an extra eps * |f| / h^2 allowance.
    """
    if mode not in ("convex", "concave"):
        raise ValueError(f"mode must be convex or concave, got {mode!r}")
    lo, hi = float(interval[0]), float(interval[1])
    if not (lo < hi):
        raise DegenerateIntervalError(f"interval [{lo}, {hi}] has nonpositive width")
    if grid_points < 3:
        raise ValueError("grid_points must be >= 3")
    if spacing == "auto":
        spacing = "log" if lo > 0 and hi / lo > 1e3 else "linear"
    if spacing == "log":
        if lo <= 0:
            raise DegenerateIntervalError("log spacing needs a positive interval")
        ratio = (hi / lo) ** (1.0 / (grid_points - 1))
        grid = [lo * ratio ** k for k in range(grid_points)]
    elif spacing == "linear":
        step = (hi - lo) / (grid_points - 1)
        grid = [lo + k * step for k in range(grid_points)]
    else:
        raise ValueError(f"spacing must be auto, log, or linear, got {spacing!r}")

    def case(_rng: Rng, i: int):
        x = grid[i]
        # the step floor is the local spacing: a global floor overshoots
        # the small end of a log grid and leaves the domain entirely
        local = grid[i + 1] - grid[i] if i + 1 < grid_points else grid[i] - grid[i - 1]
        h = _REL_STEP * max(abs(x), local)
        d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        # cancellation allowance: the numerator is exact only to eps*|f|
        noise = 8.0 * _EPS * max(1.0, abs(f(x))) / (h * h)
        bound = tol.slack + noise
        ok = d2 >= -bound if mode == "convex" else d2 <= bound
        return ok, {"x": real_str(x), "second_difference": real_str(d2), "bound": real_str(bound)}

    law = f"analysis/second-derivative/{mode}/{f.name}"
    return LawReport((run_law(law, seed=0, cases=grid_points, case_fn=case),))


def div(P: FiniteDist, Q: FiniteDist, base: float = 2.0) -> float:
    """Divergence D(P || Q) = sum_a P(a) log(P(a)/Q(a)), base 2.

    Defined only when Q dominates P; P(a) = 0 terms contribute 0 and
    are dropped before any division, so no 0/0 arises.
    """
    if P.n != Q.n:
        raise ArityMismatchError(f"alphabet sizes differ: {P.n} vs {Q.n}")
    if not dominates(Q, P):
        raise NotDominatedError(f"Q={Q} does not dominate P={P}")
    total = 0.0
    for pa, qa in zip(P.weights, Q.weights):
        if pa > 0:
            total += float(pa) * log_ext(float(pa / qa), base)
    return total


def check_div_nonneg(seed: int = 0, cases: int = 10_000, alphabet: int = 3,
                     tol: Tolerance = Tolerance(slack=1e-12)) -> LawReport:
    """div(P, Q) >= 0 up to slack on sampled dominated pairs."""

    def case(rng: Rng, _i: int):
        pair = rand_dominated_pair(rng, alphabet)
        value = div(pair.P, pair.Q)
        return value >= -tol.slack, {"P": str(pair.P), "Q": str(pair.Q),
                                     "div": real_str(value)}

    return LawReport((run_law("analysis/divergence-nonnegative", seed, cases, case),))


def check_div_convexity(seed: int = 0, cases: int = 10_000, alphabet: int = 4,
                        tol: Tolerance = Tolerance()) -> LawReport:
    """Divergence is jointly convex on dominated pairs.

    Mixtures are formed in the dominated-pair space, so dominance of
    the mixed pair is guaranteed exactly and no sample is rejected.
    """
    space = DominatedPairSpace(alphabet)

    def case(rng: Rng, _i: int):
        a = rand_dominated_pair(rng, alphabet)
        b = rand_dominated_pair(rng, alphabet)
        lam = rand_prob(rng)
        mixed: DominatedPair = space.conv(lam, a, b)
        lhs = div(mixed.P, mixed.Q)
        rhs = float_conv(float(lam), div(a.P, a.Q), div(b.P, b.Q))
        return lhs <= rhs + tol.slack, {
            "lam": str(lam), "P1": str(a.P), "Q1": str(a.Q),
            "P2": str(b.P), "Q2": str(b.Q),
            "lhs": real_str(lhs), "rhs": real_str(rhs),
        }

    return LawReport((run_law("analysis/divergence-convexity", seed, cases, case),))


def check_order_laws(seed: int = 0, cases: int = 500) -> LawReport:
    """The float order is reflexive, transitive, and antisymmetric."""

    def sample(rng: Rng) -> float:
        return rng.uniform(-100.0, 100.0)

    def reflexive(rng: Rng, _i: int):
        x = sample(rng)
        return x <= x, {"x": real_str(x)}

    def transitive(rng: Rng, _i: int):
        vals = sorted(sample(rng) for _ in range(3))
        x, y, z = vals
        ok = (not (x <= y and y <= z)) or x <= z
        return ok, {"x": real_str(x), "y": real_str(y), "z": real_str(z)}

    def antisymmetric(rng: Rng, _i: int):
        x = sample(rng)
        y = x if rng.random() < 0.5 else sample(rng)
        ok = (not (x <= y and y <= x)) or x == y
        return ok, {"x": real_str(x), "y": real_str(y)}

    return LawReport((
        run_law("analysis/order-reflexivity", seed, cases, reflexive),
        run_law("analysis/order-transitivity", seed, cases, transitive),
        run_law("analysis/order-antisymmetry", seed, cases, antisymmetric),
    ))

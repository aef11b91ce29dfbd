"""The multiary combination operator and the multiary axiom checkers.

convn is defined from the binary operator by recursion on the arity:

    convn(d, x) = x_0                                   if d_0 = 1 or n = 1
                = conv(d_0, x_0, convn(d', tail x))     otherwise,
    with d'_i = d_{i+1} / (1 - d_0).

The guard is exactly where exact division would hit zero.  Checkers for
the standard laws (projection, barycenter), the partition-style laws
(partition, idempotence), the derived laws (map, injective map,
partition-barycenter), permutation invariance, and the binary/multiary
round-trips all sample seeded cases and compare with exact equality.

Two deliberately wrong variants ship for checker calibration:
convn_noshortcut (total, still lawful) and convn_unguarded (divides by
zero on point masses; the checkers must flag it).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .checking import (
    LawReport,
    Rng,
    rand_disjoint_rows_matrix,
    rand_fdist,
    rand_index_map,
    rand_injection,
    rand_permutation,
    rand_prob,
    rand_stochastic_matrix,
    run_law,
)
from .errors import ArityMismatchError
from .fdist import (
    FiniteDist,
    IndexMap,
    StochasticMatrix,
    mix_rows,
    partition_inner,
    permute_dist,
    pushforward,
    rho_dist,
)
from .rational import Prob
from .spaces import ConvexSpace, Point, PointSampler

BinaryOp = Callable[[Prob, Point, Point], Point]


def convn_with_binary(binary: BinaryOp, d: FiniteDist, xs: Sequence[Point]) -> Point:
    """The arity recursion over an arbitrary binary operator."""
    if len(xs) != d.n:
        raise ArityMismatchError(f"{d.n} weights for {len(xs)} points")
    if d[0] == 1 or d.n == 1:
        return xs[0]
    head = d[0]
    tail = FiniteDist(tuple(w / (1 - head) for w in d.weights[1:]))
    return binary(Prob(head), xs[0], convn_with_binary(binary, tail, xs[1:]))


def convn(space: ConvexSpace, d: FiniteDist, xs: Sequence[Point]) -> Point:
    """The multiary combination of xs under d in the given space."""
    return convn_with_binary(space.conv, d, xs)


def binconv_from_convn(space: ConvexSpace, p: Prob, x0: Point, x1: Point) -> Point:
    """The binary operator recovered from convn at arity 2, weights (p, 1-p)."""
    return convn(space, FiniteDist((Fraction(p), 1 - Fraction(p))), [x0, x1])


def convn_noshortcut(space: ConvexSpace, d: FiniteDist, xs: Sequence[Point]) -> Point:
    """Variant without the d_0 = 1 shortcut, made total by a uniform tail.

    When d_0 = 1 the tail has zero mass and any tail distribution is
    absorbed by the unit law, so this variant still satisfies every
    law; it documents that the shortcut matters only for totality of
    the exact division.
    """
    if len(xs) != d.n:
        raise ArityMismatchError(f"{d.n} weights for {len(xs)} points")
    if d.n == 1:
        return xs[0]
    head = d[0]
    if head == 1:
        tail = FiniteDist.uniform(d.n - 1)
    else:
        tail = FiniteDist(tuple(w / (1 - head) for w in d.weights[1:]))
    return space.conv(Prob(head), xs[0], convn_noshortcut(space, tail, xs[1:]))


def convn_unguarded(space: ConvexSpace, d: FiniteDist, xs: Sequence[Point]) -> Point:
    """Mutant that drops the d_0 = 1 guard outright.

    Divides by zero on any point mass at index 0 with arity > 1; the
    projection-law checker flags it with the offending inputs.
    """
    if len(xs) != d.n:
        raise ArityMismatchError(f"{d.n} weights for {len(xs)} points")
    if d.n == 1:
        return xs[0]
    head = d[0]
    tail = FiniteDist(tuple(w / (1 - head) for w in d.weights[1:]))
    return space.conv(Prob(head), xs[0], convn_unguarded(space, tail, xs[1:]))


ConvnFn = Callable[[ConvexSpace, FiniteDist, Sequence[Point]], Point]


def _points(space: ConvexSpace, sampler: PointSampler | None, rng: Rng, k: int) -> list:
    pt = sampler or space.sample_point
    return [pt(rng) for _ in range(k)]


def _fmt_points(space: ConvexSpace, xs: Sequence[Point]) -> str:
    return "[" + ", ".join(space.format_point(x) for x in xs) + "]"


def check_projection_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                         max_n: int = 6, sampler: PointSampler | None = None,
                         convn_fn: ConvnFn = convn) -> LawReport:
    """Point mass at j selects x_j exactly."""

    def case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        j = rng.randrange(n)
        xs = _points(space, sampler, rng, n)
        d = FiniteDist.point_mass(n, j)
        lhs = convn_fn(space, d, xs)
        return lhs == xs[j], {
            "n": str(n), "j": str(j), "x": _fmt_points(space, xs),
            "lhs": space.format_point(lhs), "rhs": space.format_point(xs[j]),
        }

    return LawReport((run_law("multiary/projection", seed, cases, case),))


def check_barycenter_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                         max_n: int = 6, max_m: int = 6,
                         sampler: PointSampler | None = None,
                         matrix_sampler: Callable[[Rng, int, int], StochasticMatrix] | None = None,
                         law_name: str = "multiary/barycenter") -> LawReport:
    """convn(d, i -> convn(e_i, x)) = convn(mix_rows(d, e), x)."""
    mk_matrix = matrix_sampler or rand_stochastic_matrix

    def case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        d = rand_fdist(rng, n)
        e = mk_matrix(rng, n, m)
        xs = _points(space, sampler, rng, e.m)
        lhs = convn(space, d, [convn(space, e[i], xs) for i in range(n)])
        rhs = convn(space, mix_rows(d, e), xs)
        return lhs == rhs, {
            "d": str(d), "e": str([str(r) for r in e.rows]), "x": _fmt_points(space, xs),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((run_law(law_name, seed, cases, case),))


def check_partition_barycenter_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                                   max_n: int = 4, max_m: int = 6,
                                   sampler: PointSampler | None = None) -> LawReport:
    """The barycenter law restricted to rows with pairwise disjoint supports."""

    def disjoint(rng: Rng, n: int, m: int) -> StochasticMatrix:
        return rand_disjoint_rows_matrix(rng, n, max(n, m))

    return check_barycenter_law(
        space, seed, cases, max_n=max_n, max_m=max_m, sampler=sampler,
        matrix_sampler=disjoint, law_name="multiary/partition-barycenter",
    )


def check_partition_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                        max_n: int = 6, max_m: int = 6,
                        sampler: PointSampler | None = None,
                        convn_fn: ConvnFn = convn) -> LawReport:
    """Splitting along any block assignment preserves the combination.

    Every fourth case forces a zero-mass block (an assignment that
    avoids the last block index), exercising the uniform fallback; the
    report counts how many sampled cases had some rho_j = 0.
    """

    def case(rng: Rng, i: int):
        n = rng.randint(1, max_n)
        if i % 4 == 3:
            m = rng.randint(2, max_m)
            assign = rand_index_map(rng, n, m - 1)
            assign = IndexMap(m, assign.table)
        else:
            m = rng.randint(1, max_m)
            assign = rand_index_map(rng, n, m)
        lam = rand_fdist(rng, n)
        xs = _points(space, sampler, rng, n)
        rho = rho_dist(lam, assign)
        lhs = convn_fn(space, lam, xs)
        rhs = convn_fn(space, rho,
                       [convn_fn(space, partition_inner(j, lam, assign), xs)
                        for j in range(m)])
        detail = {
            "lam": str(lam), "assign": str(assign.table), "m": str(m),
            "x": _fmt_points(space, xs), "rho": str(rho),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }
        if any(w == 0 for w in rho):
            detail["_zero_mass_block_cases"] = "1"
        return lhs == rhs, detail

    return LawReport((run_law("multiary/partition", seed, cases, case),))


def check_idem_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                   max_n: int = 6, sampler: PointSampler | None = None) -> LawReport:
    """convn(lam, x) = A whenever x_i = A on the support of lam."""

    def case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        lam = rand_fdist(rng, n)
        target = (sampler or space.sample_point)(rng)
        xs = []
        for i in range(n):
            if lam[i] > 0 or rng.random() < 0.5:
                xs.append(target)
            else:
                xs.append((sampler or space.sample_point)(rng))
        lhs = convn(space, lam, xs)
        return lhs == target, {
            "lam": str(lam), "x": _fmt_points(space, xs),
            "lhs": space.format_point(lhs), "rhs": space.format_point(target),
        }

    return LawReport((run_law("multiary/idempotence", seed, cases, case),))


def check_map_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                  max_n: int = 6, sampler: PointSampler | None = None,
                  injective: bool = False) -> LawReport:
    """convn(d, i -> g_{u(i)}) = convn(pushforward(d, u), g)."""
    law = "multiary/injective-map" if injective else "multiary/map"

    def case(rng: Rng, _i: int):
        if injective:
            n = rng.randint(1, max_n)
            m = rng.randint(1, n)
            u = rand_injection(rng, m, n)
        else:
            n = rng.randint(1, max_n)
            m = rng.randint(1, max_n)
            u = rand_index_map(rng, m, n)
        d = rand_fdist(rng, m)
        gs = _points(space, sampler, rng, n)
        lhs = convn(space, d, [gs[u(i)] for i in range(m)])
        rhs = convn(space, pushforward(d, u), gs)
        return lhs == rhs, {
            "d": str(d), "u": str(u.table), "g": _fmt_points(space, gs),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((run_law(law, seed, cases, case),))


def check_perm_law(space: ConvexSpace, seed: int = 0, cases: int = 500,
                   max_n: int = 6, sampler: PointSampler | None = None) -> LawReport:
    """convn(d o s, x o s) = convn(d, x) for any permutation s."""

    def case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        d = rand_fdist(rng, n)
        xs = _points(space, sampler, rng, n)
        s = rand_permutation(rng, n)
        lhs = convn(space, permute_dist(d, s), [xs[s(i)] for i in range(n)])
        rhs = convn(space, d, xs)
        return lhs == rhs, {
            "d": str(d), "s": str(s.table), "x": _fmt_points(space, xs),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    return LawReport((run_law("multiary/permutation", seed, cases, case),))


def check_roundtrips(space: ConvexSpace, seed: int = 0, cases: int = 500,
                     max_n: int = 6, sampler: PointSampler | None = None) -> LawReport:
    """The binary/multiary interpretations cancel out.

    (i)  the binary operator recovered from convn agrees with conv;
    (ii) rebuilding a multiary operator from that recovered binary
         operator agrees with convn, extensionally on sampled inputs.
    """

    def binconv_case(rng: Rng, _i: int):
        p = rand_prob(rng)
        a, b = _points(space, sampler, rng, 2)
        lhs = binconv_from_convn(space, p, a, b)
        rhs = space.conv(p, a, b)
        return lhs == rhs, {
            "p": str(p), "a": space.format_point(a), "b": space.format_point(b),
            "lhs": space.format_point(lhs), "rhs": space.format_point(rhs),
        }

    def rederived_case(rng: Rng, _i: int):
        n = rng.randint(1, max_n)
        d = rand_fdist(rng, n)
        xs = _points(space, sampler, rng, n)
        rederived = convn_with_binary(
            lambda p, a, b: binconv_from_convn(space, p, a, b), d, xs)
        direct = convn(space, d, xs)
        return rederived == direct, {
            "d": str(d), "x": _fmt_points(space, xs),
            "lhs": space.format_point(rederived), "rhs": space.format_point(direct),
        }

    return LawReport((
        run_law("multiary/roundtrip-binconv", seed, cases, binconv_case),
        run_law("multiary/roundtrip-rederived", seed, cases, rederived_case),
    ))


def check_multiary_laws(space: ConvexSpace, seed: int = 0, cases: int = 500,
                        max_n: int = 6, sampler: PointSampler | None = None) -> LawReport:
    """All multiary checkers bundled: standard, partition-style, derived,
    permutation, and round-trips."""
    return LawReport.merge([
        check_projection_law(space, seed, cases, max_n, sampler),
        check_barycenter_law(space, seed, cases, max_n, max_n, sampler),
        check_partition_law(space, seed, cases, max_n, max_n, sampler),
        check_idem_law(space, seed, cases, max_n, sampler),
        check_partition_barycenter_law(space, seed, cases, min(max_n, 4), max_n, sampler),
        check_map_law(space, seed, cases, max_n, sampler, injective=True),
        check_map_law(space, seed, cases, max_n, sampler, injective=False),
        check_perm_law(space, seed, cases, max_n, sampler),
        check_roundtrips(space, seed, cases, max_n, sampler),
    ])

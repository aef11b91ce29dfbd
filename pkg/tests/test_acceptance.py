"""Acceptance suite: the run-all gate for the whole package.

Eleven numbered checks, each printing one PASS/FAIL line (run with
``pytest tests/test_acceptance.py -s -q`` to see them).  Rational-side
checks demand exact equality over fixed seeded case counts; float-side
checks use the documented additive slacks.  The final check turns the
suite on the shipped mutants to show the checkers can actually fail.
"""

import math
from fractions import Fraction as F

from convexalg import (
    FiniteDist,
    FirstProjectionLine,
    RatLine,
    RatVectorSpace,
    Tolerance,
    check_binary_laws,
    check_conical_laws,
    check_entropic_identity,
    check_convex_in,
    check_div_convexity,
    check_div_nonneg,
    check_hull_reconstruction,
    check_s1_convn,
    convn,
    div,
    get_instance,
    instance_names,
    s1,
    scaled_sum,
    scalept,
    second_derivative_test,
)
from convexalg.analysis import FUNCTIONS
from convexalg.checking import law_rng, rand_fdist, rand_fraction, rand_stochastic_matrix
from convexalg.conical import check_avgn
from convexalg.multiary import (
    check_barycenter_law,
    check_idem_law,
    check_map_law,
    check_partition_barycenter_law,
    check_partition_law,
    check_perm_law,
    check_projection_law,
    check_roundtrips,
    convn_unguarded,
)

LAWFUL = [name for name in instance_names() if name != "broken-demo"]

# representative instances for the checks that are not per-instance;
# the CLI law suite runs every checker on every instance anyway
BASIS = ("rat", "vec2")


def record(num: int, label: str, ok: bool) -> None:
    print(f"[{num:02d}] {'PASS' if ok else 'FAIL'} {label}")
    assert ok, f"acceptance check {num} failed: {label}"


def test_01_binary_axioms():
    ok = True
    for name in LAWFUL:
        report = check_binary_laws(get_instance(name), seed=101, cases=500)
        ok = ok and report.ok and len(report.results) == 4
    record(1, f"binary axioms: 4 laws x 500 cases x {len(LAWFUL)} instances, exact", ok)


def test_02_projection_and_barycenter():
    ok = True
    for name in LAWFUL:
        space = get_instance(name)
        ok = ok and check_projection_law(space, seed=102, cases=500, max_n=6).ok
        ok = ok and check_barycenter_law(space, seed=102, cases=500,
                                         max_n=6, max_m=6).ok
    # independent oracle: the barycenter as a plain affine sum of coordinates
    vec = RatVectorSpace(3)
    for i in range(500):
        rng = law_rng(1002, "acceptance/barycenter-oracle", i)
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        d = rand_fdist(rng, n)
        e = rand_stochastic_matrix(rng, n, m)
        xs = [vec.sample_point(rng) for _ in range(m)]
        nested = convn(vec, d, [convn(vec, e[r], xs) for r in range(n)])
        w = [sum((d[r] * e[r][j] for r in range(n)), F(0)) for j in range(m)]
        oracle = tuple(sum((w[j] * xs[j][k] for j in range(m)), F(0))
                       for k in range(3))
        ok = ok and nested == oracle
    record(2, "projection + barycenter: 500 cases per instance, oracle-checked", ok)


def test_03_partition_and_map_laws():
    ok = True
    for name in BASIS:
        space = get_instance(name)
        part = check_partition_law(space, seed=103, cases=500)
        ok = ok and part.ok
        ok = ok and part.results[0].meta.get("zero_mass_block_cases", 0) >= 50
        ok = ok and check_idem_law(space, seed=103, cases=500).ok
        ok = ok and check_partition_barycenter_law(space, seed=103, cases=500).ok
        ok = ok and check_map_law(space, seed=103, cases=500, injective=True).ok
        ok = ok and check_map_law(space, seed=103, cases=500).ok
    record(3, "partition (>= 50 empty-block cases), idempotence, derived maps: "
              "500 cases each, exact", ok)


def test_04_roundtrips():
    ok = True
    for name in BASIS:
        ok = ok and check_roundtrips(get_instance(name), seed=104, cases=500,
                                     max_n=6).ok
    record(4, "binary/multiary round-trips: 500 cases, arity <= 6, exact", ok)


def test_05_conical_envelope():
    line = RatLine()
    laws = check_conical_laws(line, seed=105, cases=500)
    ok = laws.ok and len(laws.results) == 13
    # the weight homomorphism is the additive + scaling pair of the 13
    ok = ok and laws.result("conical/weight-additive").passed
    ok = ok and laws.result("conical/weight-scaling").passed
    ok = ok and check_s1_convn(line, seed=105, cases=500, max_n=6).ok
    d = FiniteDist((F(1, 2), F(1, 4), F(1, 4)))
    for i in range(500):
        rng = law_rng(1005, "acceptance/three-point-envelope", i)
        x, y, z = (rand_fraction(rng) for _ in range(3))
        lhs = s1(convn(line, d, (x, y, z)))
        rhs = scaled_sum(line, [scalept(F(1, 2), s1(x)),
                                scalept(F(1, 4), s1(y)),
                                scalept(F(1, 4), s1(z))])
        ok = ok and lhs == rhs
    record(5, "conical scaled points: 13 laws x 500, unit embedding, "
              "(1/2,1/4,1/4) sum identity, exact", ok)


def test_06_permutations_and_exchange():
    ok = True
    for name in LAWFUL:
        space = get_instance(name)
        ok = ok and check_perm_law(space, seed=106, cases=500, max_n=6).ok
        ok = ok and check_entropic_identity(space, seed=106, cases=500).ok
    record(6, "permutation invariance + 2x2 exchange identity: "
              "500 cases per instance, exact", ok)


def test_07_affine_average():
    ok = check_avgn(seed=107, cases=500, max_n=6).ok
    line = RatLine()
    for i in range(500):
        rng = law_rng(1007, "acceptance/affine-average", i)
        n = rng.randint(1, 6)
        e = rand_fdist(rng, n)
        g = [rand_fraction(rng) for _ in range(n)]
        ok = ok and convn(line, e, g) == sum((e[j] * g[j] for j in range(n)), F(0))
    record(7, "scalar combinations equal the weighted sum: 500 cases, "
              "tolerance 0", ok)


def test_08_hull_union_split():
    ok = True
    for name in BASIS:
        report = check_hull_reconstruction(get_instance(name), seed=108,
                                           cases=500, max_arity=8)
        result = report.results[0]
        ok = ok and result.passed
        ok = ok and result.meta["all_x_cases"] >= 50
        ok = ok and result.meta["all_y_cases"] >= 50
    record(8, "hull union split reconstructs exactly: 500 witnesses, "
              "arity <= 8, >= 50 all-X and all-Y cases", ok)


def test_09_log_concavity():
    lo, hi = 2.0 ** -20, 2.0 ** 20
    sampled = check_convex_in(FUNCTIONS["log_ext"], (lo, hi), seed=109,
                              cases=10_000, tol=Tolerance(1e-9), mode="concave")
    grid = second_derivative_test(FUNCTIONS["log_ext"], (lo, hi),
                                  grid_points=1000, mode="concave")
    record(9, "base-2 log concave on (2^-20, 2^20): 10^4 samples at slack 1e-9 "
              "+ 1000-point log grid", sampled.ok and grid.ok)


def test_10_divergence():
    ok = True
    for i in range(1000):
        rng = law_rng(1010, "acceptance/self-divergence", i)
        P = rand_fdist(rng, rng.randint(2, 4))
        ok = ok and abs(div(P, P)) <= 1e-12
    ok = ok and check_div_nonneg(seed=110, cases=10_000, alphabet=3,
                                 tol=Tolerance(1e-12)).ok
    for alphabet in (2, 3, 4):
        ok = ok and check_div_convexity(seed=110, cases=3_400, alphabet=alphabet,
                                        tol=Tolerance(1e-9)).ok
    ok = ok and abs(div(FiniteDist((F(1), F(0))),
                        FiniteDist((F(1, 2), F(1, 2)))) - 1.0) <= 1e-12
    record(10, "divergence: zero on the diagonal, >= -1e-12 on 10^4 pairs, "
               "jointly convex on 10^4 mixtures, 1-bit hand value", ok)


def test_11_mutants_are_flagged():
    skew = check_binary_laws(FirstProjectionLine(), seed=111, cases=200) \
        .result("binary/skewed-commutativity")
    caught_bias = not skew.passed and skew.counterexample is not None

    proj = check_projection_law(RatLine(), seed=111, cases=200,
                                convn_fn=convn_unguarded).results[0]
    caught_crash = (not proj.passed and proj.counterexample is not None
                    and "ZeroDivisionError" in proj.counterexample.detail.get("error", ""))

    sin = check_convex_in(FUNCTIONS["sin"], (0.0, 2.0 * math.pi), seed=111,
                          cases=2_000).results[0]
    caught_sin = not sin.passed and sin.counterexample is not None

    record(11, "mutants flagged with counterexamples: first-projection conv, "
               "unguarded recursion, sin-as-convex",
           caught_bias and caught_crash and caught_sin)

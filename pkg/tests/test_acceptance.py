"""
One test per acceptance criterion, at full scale. A PASS/FAIL line per
criterion is printed in the terminal summary (see conftest.py).
"""

import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from detpaths.exactpoly import Poly, monomial, x
from detpaths.identities import (
    check_cauchy_binet,
    check_dodgson_schur,
    fuzz,
    maybenew_gate,
    muir148_gate,
    symbolic,
)
from detpaths.jacobitrudi import jt_matrix
from detpaths.linalg import det, matmul, random_int_matrix
from detpaths.overlays import verify_dodgson_bijection
from detpaths.paths import (
    LatticePath,
    PathTuple,
    endpoints_for_shape,
    enumerate_signed_tuples,
    intersection_points,
    is_nonintersecting,
    left_label,
    lgv_involution,
    random_tuple,
    signed_weight_sum,
)
from detpaths.shapes import partitions_in_box, shape, shape_lattice
from detpaths.tableaux import bialternant_eval, skew_schur

criterion = pytest.mark.criterion


def _fuzz_ok(name, params, trials, seed):
    v = fuzz(name, params, trials=trials, seed=seed)
    print(f"  {name} {params} trials={v.trials} seed={seed}: {v.status}")
    assert v.passed, v.counterexample
    assert v.trials == trials and not v.vacuous


@criterion(1, "tableau sum equals det of the h-matrix, length <= 4, weight <= 8, n = 3")
def test_jacobi_trudi_lattice():
    start = time.perf_counter()
    count = 0
    for sh in shape_lattice(4, 8, 8):
        assert skew_schur(sh, 3) == det(jt_matrix(sh, 3)), str(sh)
        count += 1
    elapsed = time.perf_counter() - start
    print(f"  {count} shapes in {elapsed:.1f}s")
    assert count == 35542
    assert elapsed < 120


@criterion(2, "bialternant quotient equals the tableau sum at 20 random points")
def test_bialternant():
    rng = random.Random(2)
    for lam in [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)]:
        s = skew_schur(shape(lam), 3)
        for _ in range(20):
            pt = rng.sample(range(-30, 31), 3)
            value = s.eval_int({x(i + 1): v for i, v in enumerate(pt)})
            assert bialternant_eval(lam, pt) == Fraction(value), (lam, pt)


@criterion(3, "signed sum over all path tuples equals the Schur polynomial; involution laws")
def test_lgv_cancellation():
    shapes = list(shape_lattice(3, 5, 5))
    tuples = 0
    for n in (1, 2, 3):
        for sh in shapes:
            ts = list(enumerate_signed_tuples(sh, n))
            tuples += len(ts)
            assert signed_weight_sum(ts) == skew_schur(sh, n), (str(sh), n)
    print(f"  {len(shapes)} shapes x n=1..3, {tuples} tuples")

    seed = 31337
    rng = random.Random(seed)
    pool = [sh for sh in shapes if sh.length >= 2]
    done = failures = 0
    while done < 10_000:
        sh, n = rng.choice(pool), rng.randint(2, 3)
        P = random_tuple(sh, n, rng)
        if P is None or is_nonintersecting(P):
            continue
        Q = lgv_involution(P)
        if not (Q.weight() == P.weight() and Q.sign == -P.sign and lgv_involution(Q) == P):
            failures += 1
        done += 1
    print(f"  {done} random intersecting tuples, seed={seed}, failures={failures}")
    assert failures == 0


@criterion(4, "documented intersecting quadruple: q = (6,2), transposition (3,4), cancellation")
def test_figure_instance():
    sh = shape((8, 6, 4, 3))
    lower, upper = endpoints_for_shape(sh, 7, t=5)
    steps = ("HHVHVHHVVVHHHV", "VHHHVVVHHHVV", "VVVVHHHHVV", "VVVVVVHHH")
    P = PathTuple(tuple(LatticePath(s, st) for s, st in zip(lower, steps)), (1, 2, 3, 4), sh, 7, 5)
    assert [p.end for p in P.paths] == upper
    assert intersection_points(P)[0] == (6, 2)
    Q = lgv_involution(P)
    moved = sorted(left_label(i, 4) for i, k in enumerate(Q.perm, start=1) if i != k)
    assert moved == [3, 4]

    def mono(*pairs):
        return Poly({monomial({x(k): e for k, e in pairs}): 1})

    first = mono((7, 3)) * mono((5, 4)) * mono((2, 3), (5, 3)) * mono((1, 2), (2, 1), (3, 2), (6, 3))
    second = mono((7, 3)) * mono((5, 4)) * mono((2, 4), (3, 2), (6, 3)) * mono((1, 2), (5, 3))
    assert first - second == Poly()
    assert Poly({P.weight(): 1}) == first and Poly({Q.weight(): 1}) == second


@criterion(5, "condensation: symbolic m=3, fuzz m=4,5, Schur route for lambda_1 <= 3")
def test_dodgson():
    assert symbolic("dodgson", {"m": 3})
    _fuzz_ok("dodgson", {"m": 4}, 1000, 5)
    _fuzz_ok("dodgson", {"m": 5}, 1000, 5)
    lams = [p for p in partitions_in_box(3, 3) if len(p) >= 2]
    for lam in lams:
        assert check_dodgson_schur(lam, 2), lam
    print(f"  schur route: {len(lams)} partitions")


@criterion(6, "generalized condensation: nine-term display and (m,k) sweep after the sign gate")
def test_generalized_condensation():
    gate = maybenew_gate()
    for finding in gate.findings:
        print(f"  gate: {finding}")
    assert gate.reading == "sign-free"
    _fuzz_ok("maybenew-k4", {}, 1000, 6)
    for m, k in [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4)]:
        _fuzz_ok("maybenew", {"m": m, "k": k}, 500, 6)


@criterion(7, "exchange relations: symbolic m=2, fuzz m=3 for |R| = 1,2,3 and k=2, m=1")
def test_pluecker():
    assert symbolic("pluecker", {"m": 2, "R": (1,)})
    for size in (1, 2, 3):
        for R in combinations(range(1, 4), size):
            _fuzz_ok("pluecker", {"m": 3, "R": R}, 1000, 7)
    _fuzz_ok("pluecker-general", {"m": 1, "k": 2}, 1000, 7)


@criterion(8, "Laplace expansions and the complementary-minor expansion after its gate")
def test_laplace_and_muir():
    assert symbolic("laplace-column", {"m": 4, "j": 1})
    for size in (1, 2):
        for I in combinations(range(1, 6), size):
            _fuzz_ok("laplace-general", {"m": 5, "I": I}, 500, 8)
    gate = muir148_gate()
    for finding in gate.findings:
        print(f"  gate: {finding}")
    assert gate.reading == "complementary"
    _fuzz_ok("muir148", {"m": 3, "k": 2}, 500, 8)


@criterion(9, "Cauchy-Binet: m > n, m = n, and fuzz at (2,3), (2,4), (3,5)")
def test_cauchy_binet():
    rng = random.Random(9)
    a, b = random_int_matrix(3, 2, rng), random_int_matrix(2, 3, rng)
    assert det(matmul(a, b)) == 0 and check_cauchy_binet(a, b)
    a, b = random_int_matrix(4, 4, rng), random_int_matrix(4, 4, rng)
    assert check_cauchy_binet(a, b) and det(matmul(a, b)) == det(a) * det(b)
    for m, n in [(2, 3), (2, 4), (3, 5)]:
        _fuzz_ok("cauchy-binet", {"m": m, "n": n}, 1000, 9)


@criterion(10, "overlay recolouring is a weight-preserving bijection for (2,1) and (3,2,1), n = 2")
def test_overlay_bijection():
    start = time.perf_counter()
    for lam in [(2, 1), (3, 2, 1)]:
        v = verify_dodgson_bijection(lam, 2)
        print(f"  {lam}: {v.status}; " + "; ".join(v.notes))
        assert v.passed, v.counterexample
    assert time.perf_counter() - start < 60


@criterion(11, "sign-flipped checkers are caught within 10 trials")
def test_mutants():
    for name, params in [("laplace-column", {"m": 5}), ("dodgson", {"m": 4})]:
        v = fuzz(name, params, trials=10, seed=11, mutant=True)
        print(f"  {name} mutant: {v.status} at trial {v.counterexample and v.counterexample['trial']}")
        assert not v.passed
        assert v.counterexample["trial"] < 10

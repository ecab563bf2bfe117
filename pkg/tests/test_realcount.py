from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from symreal.algebra import BiPoly, UniPoly, poly_parse, squarefree_part
from symreal.realcount.decide import decide, decisive_root, fiber_count_table
from symreal.realcount.habicht import (fiber_count_rational, fiber_counts, fiber_real_root_count, pmv,
                                       sturm_habicht)
from symreal.realcount.sturm import (count_real_roots, count_roots_in, isolate_real_roots,
                                     real_root_sign_at_isolated, refine_to_width, sign_variations, sturm_sequence, tarski_query)
from symreal.realcount.thom import SignDetermination, signs_at_roots, thom_compare, thom_encode
from symreal.symmetry import Partition
from symreal.zerodim.param import ZeroDimParam, solve_zero_dim

from _support import planted_fiber_instance, planted_real_poly

WORKED_V = UniPoly([-27, 60, 62, -360, 200])


def _grid_sign_changes(p, lo, hi, steps):
    """Exact sign changes of p on a rational grid (zeros counted once)."""
    count, prev = 0, None
    for k in range(steps + 1):
        x = lo + (hi - lo) * Fraction(k, steps)
        s = p.sign_at(x)
        if s == 0:
            count += 1
            prev = None
            continue
        if prev is not None and s != prev:
            count += 1
        prev = s
    return count


# -- univariate counting ---------------------------------------------------------

def test_count_no_real_roots():
    assert count_real_roots(UniPoly([-1, 0, 4, 0, -6])) == 0


def test_count_worked_v_against_grid():
    assert count_real_roots(WORKED_V) == 2
    assert _grid_sign_changes(WORKED_V, Fraction(-4), Fraction(4), 1024) == 2


def test_count_simple():
    assert count_real_roots(UniPoly.from_roots([1, -1])) == 2
    assert count_real_roots(UniPoly([7])) == 0


@pytest.mark.parametrize("seed", range(200))
def test_planted_univariate_counts(seed):
    p, want = planted_real_poly(random.Random(seed))
    assert count_real_roots(p) == want
    assert len(isolate_real_roots(p)) == want


def test_count_roots_in_interval():
    p = UniPoly.from_roots([-2, 1, 3])
    assert count_roots_in(p, Fraction(0), Fraction(3)) == 2  # (a, b]
    assert count_roots_in(p, Fraction(-5), Fraction(-2)) == 1


def test_isolation_and_refinement():
    p = UniPoly([-2, 0, 1])
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2
    lo, hi = refine_to_width(p, *ivs[1], Fraction(1, 10 ** 6))
    assert hi - lo <= Fraction(1, 10 ** 6)
    assert lo * lo <= 2 <= hi * hi


def test_tarski_query():
    v = UniPoly.from_roots([-1, 0, 2])
    assert tarski_query(UniPoly([0, 1]), v) == 0  # signs -, 0, + at the roots
    assert tarski_query(UniPoly([1]), v) == 3
    assert tarski_query(UniPoly([-1, 0, 1]), v) == 0  # signs 0, -, + at the roots


def test_sign_variations_skips_zeros():
    assert sign_variations([1, 0, -1, 0, 0, 1]) == 2
    assert sign_variations([]) == 0


def test_sturm_sequence_starts_with_p_and_derivative():
    p = UniPoly([-2, 0, 1])
    seq = sturm_sequence(p)
    assert seq[0] == p and seq[1] == p.diff()


# -- Thom encodings ----------------------------------------------------------------

def test_thom_sqrt_two():
    encs = thom_encode(UniPoly([-2, 0, 1]))
    assert [e.signs for e in encs] == [(-1,), (1,)]
    assert [e.root_index for e in encs] == [0, 1]


def test_thom_no_real_roots():
    assert thom_encode(UniPoly([1, 0, 1])) == []


def test_thom_three_roots_match_direct_evaluation():
    v = UniPoly.from_roots([1, 2, 3])
    encs = thom_encode(v)
    for enc, r in zip(encs, [1, 2, 3]):
        assert enc.signs == tuple(v.diff(k).sign_at(r) for k in range(1, v.degree))


def test_thom_rejects_bad_input():
    with pytest.raises(ValueError):
        thom_encode(UniPoly([]))
    with pytest.raises(ValueError):
        thom_encode(UniPoly.from_roots([1, 1]))


def test_thom_compare_order():
    assert thom_compare((-1,), (1,)) == -1
    assert thom_compare((1,), (-1,)) == 1
    assert thom_compare((0, 1), (0, 1)) == 0


@pytest.mark.parametrize("seed", range(30))
def test_thom_uniqueness_and_count(seed):
    rng = random.Random(1000 + seed)
    p, want = planted_real_poly(rng, max_real=5)
    v = squarefree_part(p)
    encs = thom_encode(v)
    assert len(encs) == want == count_real_roots(v)
    assert len({e.signs for e in encs}) == len(encs)
    # ascending: compare with isolating intervals through the sign of v' at the root
    ivs = isolate_real_roots(v)
    for enc, (lo, hi) in zip(encs, ivs):
        if v.degree > 1:
            assert enc.signs[0] == real_root_sign_at_isolated(v.diff(), v, lo, hi)


def test_sign_determination_counts():
    v = UniPoly.from_roots([-2, -1, 1, 2])
    q = UniPoly([0, 1])
    conds = dict(SignDetermination(v).run([q, UniPoly([-1, 0, 1])]))
    assert conds == {(-1, 1): 1, (-1, 0): 1, (1, 0): 1, (1, 1): 1}


def test_signs_at_roots_ascending():
    v = UniPoly.from_roots([Fraction(-1, 2), 3])
    rows = signs_at_roots(v, [UniPoly([0, 1])])
    assert [s for _, s in rows] == [(-1,), (1,)]


# -- Sturm-Habicht ------------------------------------------------------------------

def _bi(*coeffs):
    return BiPoly([UniPoly(c) if isinstance(c, list) else UniPoly([c]) for c in coeffs])


def test_sturm_habicht_u_squared_minus_t():
    rho = _bi([0, -1], 0, 1)  # u^2 - t
    S = sturm_habicht(rho)
    assert list(S.principal_coeffs) == [UniPoly([1]), UniPoly([2]), UniPoly([0, 4])]
    for t, want in [(3, 2), (0, 1), (-1, 0), (Fraction(1, 9), 2)]:
        signs = [c.sign_at(t) for c in S.principal_coeffs]
        assert pmv(signs) == want


def test_sturm_habicht_linear():
    rho = _bi([1, 2, 3], 5)  # 5u + q(t)
    S = sturm_habicht(rho)
    for t in range(-3, 4):
        assert pmv([c.sign_at(t) for c in S.principal_coeffs]) == 1


def test_sturm_habicht_first_entries():
    rho = _bi([0, -1], 0, 1)
    S = sturm_habicht(rho)
    assert S.sequence[0] == rho and S.sequence[1] == rho.diff_u()
    degs = [p.degree_u for p in S.sequence if p]
    assert degs == sorted(degs, reverse=True)


def test_sturm_habicht_zero_rejected():
    with pytest.raises(ValueError):
        sturm_habicht(BiPoly([]))


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
@settings(max_examples=150, deadline=None)
def test_sturm_habicht_constant_coefficients_match_sturm(cs):
    p = UniPoly(cs)
    if p.degree < 1:
        return
    S = sturm_habicht(BiPoly([UniPoly([c]) for c in p.coeffs]))
    assert pmv([c.sign_at(0) for c in S.principal_coeffs]) == count_real_roots(p)


def test_sturm_habicht_against_sympy_counts():
    sympy = pytest.importorskip("sympy")
    u = sympy.Symbol("u")
    rng = random.Random(4)
    for _ in range(40):
        du = rng.randint(1, 4)
        coeffs = [UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]) for _ in range(du)]
        coeffs.append(UniPoly([rng.choice([-2, -1, 1, 2])]))
        rho = BiPoly(coeffs)
        S = sturm_habicht(rho)
        for t in [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)]:
            spec = rho.eval_t(t)
            expr = sum(sympy.Rational(c.numerator, c.denominator) * u ** k for k, c in enumerate(spec.coeffs))
            want = len(set(sympy.real_roots(sympy.Poly(expr, u))))
            assert pmv([c.sign_at(t) for c in S.principal_coeffs]) == want


def test_pmv_examples():
    assert pmv([1, 1, 1]) == 2
    assert pmv([1, -1]) == -1
    assert pmv([1, 0, -1]) == 0  # an even gap contributes nothing
    assert pmv([1, 0, 0, -1]) == 1  # eps_3 = -1


# -- fiber counts -------------------------------------------------------------------

def test_fiber_u_squared_minus_t_at_sqrt_two():
    rho = _bi([0, -1], 0, 1)
    v = UniPoly([-2, 0, 1])
    S = sturm_habicht(rho)
    neg, pos = thom_encode(v)
    assert fiber_real_root_count(S, neg) == 0
    assert fiber_real_root_count(S, pos) == 2


def test_fiber_t_free():
    rho = _bi(1, 0, 1)
    v = UniPoly([-2, 0, 1])
    S = sturm_habicht(rho)
    assert [fiber_real_root_count(S, e) for e in thom_encode(v)] == [0, 0]


def test_fiber_leading_coefficient_drop():
    # rho = t u^2 + u - 1: at t = 0 it is linear with one root
    rho = _bi(-1, 1, [0, 1])
    v = UniPoly.from_roots([-1, 0, 1])
    got = [c for _, c in fiber_counts(rho, v)]
    assert got == [fiber_count_rational(rho, r) for r in (-1, 0, 1)] == [0, 1, 2]


@pytest.mark.parametrize("seed", range(50))
def test_planted_fibers(seed):
    v, rho, roots, counts = planted_fiber_instance(random.Random(seed))
    got = [c for _, c in fiber_counts(rho, v)]
    assert got == counts
    for r, want in zip(roots, counts):
        if r == int(r):
            assert fiber_count_rational(rho, Fraction(int(r))) == want


# -- decide -------------------------------------------------------------------------

E22 = ("e1_1", "e2_1")


def _worked_param():
    sys_ = [poly_parse("2*e1_1^2 - 6*e2_1^2 - 4*e2_1 - 1", E22),
            poly_parse("120*e1_1*e2_1 - 108*e2_1 - 36", E22)]
    return solve_zero_dim(sys_, E22).param


def test_decide_worked_two_pairs():
    R = _worked_param()
    lam = Partition.parse("2^2")
    assert decide(R, lam) is False
    assert decide(R, lam, method="thom") is False
    assert 2 in [row[0] for row in fiber_count_table(R, lam)]


def test_decide_worked_single_block():
    R = solve_zero_dim([poly_parse("-6*e1_1^4 + 4*e1_1^2 - 1", ("e1_1",))]).param
    assert decide(R, Partition.parse("4^1")) is True


def test_decide_empty_zero_set():
    R = ZeroDimParam(UniPoly([1]), [UniPoly([]), UniPoly([])], [1, 0], E22)
    assert decide(R, Partition.parse("2^2")) is True


def test_decide_method_validation():
    with pytest.raises(ValueError):
        decide(_worked_param(), Partition.parse("2^2"), method="numeric")


def test_decisive_root_kinds():
    # points (e1, e2) = (3, 2) (real roots 1, 2) and (0, 1) (roots +-i); mu = e1
    v = UniPoly.from_roots([0, 3])
    vp = v.diff()
    e2 = UniPoly([1, Fraction(1, 3)])
    R = ZeroDimParam(v, [(UniPoly([0, 1]) * vp) % v, (e2 * vp) % v], [1, 0], E22)
    lam = Partition.parse("1^2")
    assert decisive_root(R, lam) == ("rational", 3)
    hit = decisive_root(R, lam, method="thom")
    assert hit[0] == "algebraic"
    assert decisive_root(R, lam, method="rational") == ("rational", 3)


def _random_param(rng):
    """A parametrization of two random (e1, e2) points over a v with rational roots."""
    roots = rng.sample(range(-4, 5), rng.randint(1, 3))
    v = UniPoly.from_roots(roots)
    vp = v.diff()
    # interpolate e2 through the chosen values
    e2_vals = [Fraction(rng.randint(-6, 6), rng.randint(1, 2)) for _ in roots]
    e2 = UniPoly([])
    for i, (r, y) in enumerate(zip(roots, e2_vals)):
        basis = UniPoly([y])
        for j, s in enumerate(roots):
            if j != i:
                basis = basis * UniPoly([Fraction(-s, r - s), Fraction(1, r - s)])
        e2 = e2 + basis
    return ZeroDimParam(v, [(UniPoly([0, 1]) * vp) % v, (e2 * vp) % v], [1, 0], E22), roots, e2_vals


@pytest.mark.parametrize("seed", range(40))
def test_rational_and_thom_paths_agree(seed):
    rng = random.Random(seed)
    R, roots, e2_vals = _random_param(rng)
    lam = Partition.parse("1^2")
    want = not any(r * r - 4 * y > 0 for r, y in zip(roots, e2_vals))  # z^2 - e1 z + e2 has 2 real roots
    assert decide(R, lam, method="rational") is want
    assert decide(R, lam, method="thom") is want
    assert decide(R, lam) is want
    table_thom = fiber_count_table(R, lam, "thom")
    table_rat = fiber_count_table(R, lam, "rational")
    assert table_thom == table_rat

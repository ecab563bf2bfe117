from fractions import Fraction
from functools import lru_cache
import random

import pytest
from hypothesis import given, settings, strategies as st

from symreal.algebra import MultiPoly, jacobian, poly_parse
from symreal.symmetry import (BlockVars, Partition, apply_T_lambda, fiber_polynomials, is_invariant,
                              matrix_Z, partitions_min_length, power_sum_in_elementary,
                              substitute_elementary, substitute_power_sums, to_elementary,
                              to_power_sums)
from symreal.zerodim.param import ZeroDimParam
from symreal.algebra import UniPoly

from _support import random_symmetric, worked_example, xvars

Z22 = ("z1_1", "z2_1")
E22 = ("e1_1", "e2_1")


def P(text):
    return Partition.parse(text)


# -- partitions -------------------------------------------------------------------

def test_partitions_of_four():
    got = [str(p) for p in partitions_min_length(4, 1)]
    assert got == ["1^4", "1^2,2^1", "2^2", "1^1,3^1", "4^1"]


def test_partitions_of_four_min_two():
    got = [str(p) for p in partitions_min_length(4, 2)]
    assert got == ["1^4", "1^2,2^1", "2^2", "1^1,3^1"]


@lru_cache(maxsize=None)
def _count(n, k):
    """Partitions of n into parts of size at most k."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return _count(n, k - 1) + (_count(n - k, k) if k <= n else 0)


def test_partitions_of_seven():
    assert len(partitions_min_length(7, 1)) == 15 == _count(7, 7)


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_function(n):
    assert len(partitions_min_length(n, 1)) == _count(n, n)


def test_partition_lengths_and_order():
    lams = partitions_min_length(8, 3)
    assert all(l.length >= 3 and l.n == 8 for l in lams)
    lengths = [l.length for l in lams]
    assert lengths == sorted(lengths, reverse=True)
    assert len(set(lams)) == len(lams)


def test_partition_parse_and_str():
    lam = P("2^1, 1^2")
    assert str(lam) == "1^2,2^1"
    assert P("3") == Partition(((3, 1),))
    assert lam.parts() == (2, 1, 1)
    with pytest.raises(ValueError):
        P("2^x")
    with pytest.raises(ValueError):
        Partition(((2, 1), (1, 1)))


def test_partitions_invalid_n():
    with pytest.raises(ValueError):
        partitions_min_length(0, 1)


# -- T_lambda and Z ----------------------------------------------------------------

def test_T_lambda_seven_variable_example():
    n = 7
    text = "+".join(f"x{i}*x{j}" for i in range(1, n + 1) for j in range(i, n + 1))
    f = poly_parse(text, xvars(n))
    lam = P("2^2,3^1")
    z = BlockVars.of(lam).z_flat
    assert z == ("z1_1", "z2_1", "z1_2")
    want = poly_parse("3*z1_1^2 + 3*z2_1^2 + 6*z1_2^2 + 6*z1_1*z1_2 + 4*z1_1*z2_1 + 6*z1_2*z2_1", z)
    assert apply_T_lambda(f, lam) == want


def test_T_lambda_seven_variable_jacobian():
    n = 7
    f = poly_parse("+".join(f"x{i}*x{j}" for i in range(1, n + 1) for j in range(i, n + 1)), xvars(n))
    lam = P("2^2,3^1")
    g = apply_T_lambda(f, lam)
    z = g.vars
    Z = matrix_Z(lam)
    row = [sum((g.diff(z[r]) * Z[r][m] for r in range(3)), MultiPoly.zero(z)) for m in range(n)]
    u = poly_parse("3*z1_1 + 3*z1_2 + 2*z2_1", z)
    v = poly_parse("2*z1_1 + 3*z1_2 + 3*z2_1", z)
    w = poly_parse("2*z1_1 + 4*z1_2 + 2*z2_1", z)
    assert row == [u, u, v, v, w, w, w]


def test_T_lambda_identity_partition():
    f = worked_example()
    g = apply_T_lambda(f, P("1^4"))
    assert g.vars == ("z1_1", "z2_1", "z3_1", "z4_1")
    assert g.terms == f.terms


def test_T_lambda_worked_example_single_block():
    g = apply_T_lambda(worked_example(), P("4^1"))
    assert g == poly_parse("-6*z1_1^4 + 4*z1_1^2 - 1", ("z1_1",))


def test_T_lambda_worked_example_two_pairs():
    g = apply_T_lambda(worked_example(), P("2^2"))
    assert g == poly_parse("2*z1_1^2 + 2*z2_1^2 - 6*z1_1^2*z2_1^2 - 1", Z22)


def test_T_lambda_size_mismatch():
    with pytest.raises(ValueError):
        apply_T_lambda(worked_example(), P("2^1"))


def test_matrix_Z_example():
    Z = matrix_Z(P("2^2,3^1"))
    h, t = Fraction(1, 2), Fraction(1, 3)
    assert Z == [[h, h, 0, 0, 0, 0, 0], [0, 0, h, h, 0, 0, 0], [0, 0, 0, 0, t, t, t]]


def test_matrix_Z_identity():
    Z = matrix_Z(P("1^5"))
    assert Z == [[int(i == j) for j in range(5)] for i in range(5)]


def _jacobian_identity_holds(fs, lam):
    n = lam.n
    J = jacobian(fs, xvars(n))
    lhs = [[apply_T_lambda(e, lam) for e in row] for row in J.rows]
    gs = [apply_T_lambda(f, lam) for f in fs]
    z = BlockVars.of(lam).z_flat
    Jz = jacobian(gs, z)
    Z = matrix_Z(lam)
    rhs = [[sum((Jz.rows[i][r] * Z[r][m] for r in range(lam.length)), MultiPoly.zero(z))
            for m in range(n)] for i in range(len(fs))]
    return lhs == rhs


def test_jacobian_factorization_worked_example():
    for lam in partitions_min_length(4, 1):
        assert _jacobian_identity_holds([worked_example()], lam)


@pytest.mark.parametrize("seed", range(6))
def test_jacobian_factorization_random(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    fs = [random_symmetric(rng, n, 4) for _ in range(rng.randint(1, 2))]
    for lam in partitions_min_length(n, 1):
        assert _jacobian_identity_holds(fs, lam)


# -- invariance --------------------------------------------------------------------

def test_is_invariant_examples():
    lam = P("1^2")
    assert is_invariant(poly_parse("z1_1 + z2_1", Z22), lam)
    assert not is_invariant(poly_parse("z1_1 - z2_1", Z22), lam)


def test_is_invariant_on_collapsed_symmetric():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 5)
        f = random_symmetric(rng, n, 4)
        for lam in partitions_min_length(n, 1):
            assert is_invariant(apply_T_lambda(f, lam), lam)


def test_is_invariant_partial_block_group():
    lam = P("1^1,2^2")  # blocks of sizes t=1 and t=2
    z = BlockVars.of(lam).z_flat
    assert z == ("z1_1", "z1_2", "z2_2")
    assert is_invariant(poly_parse("z1_1^3 + z1_2*z2_2", z), lam)
    assert not is_invariant(poly_parse("z1_1*z1_2", z), lam)


# -- rewriting ---------------------------------------------------------------------

def test_to_elementary_worked_example():
    g = poly_parse("2*z1_1^2 + 2*z2_1^2 - 6*z1_1^2*z2_1^2 - 1", Z22)
    assert to_elementary(g, P("2^2")) == poly_parse("2*e1_1^2 - 6*e2_1^2 - 4*e2_1 - 1", E22)


def test_to_elementary_linear():
    assert to_elementary(poly_parse("z1_1 + z2_1", Z22), P("1^2")) == poly_parse("e1_1", E22)


def test_to_elementary_objective():
    phi = poly_parse("5*(z1_1^2 + z2_1^2) - 9*(z1_1 + z2_1) - 3", Z22)
    assert to_elementary(phi, P("2^2")) == poly_parse("5*e1_1^2 - 9*e1_1 - 10*e2_1 - 3", E22)


def test_to_elementary_rejects_non_invariant():
    with pytest.raises(ValueError):
        to_elementary(poly_parse("z1_1", Z22), P("1^2"))


def test_to_power_sums_simple():
    p = ("p1_1", "p2_1")
    assert to_power_sums(poly_parse("z1_1^2 + z2_1^2", Z22), P("1^2")) == poly_parse("p2_1", p)
    assert to_power_sums(poly_parse("z1_1*z2_1", Z22), P("1^2")) == poly_parse("1/2*p1_1^2 - 1/2*p2_1", p)


def test_to_power_sums_two_block_example():
    lam = P("1^2,2^2")
    bv = BlockVars.of(lam)
    z = bv.z_flat
    assert z == ("z1_1", "z2_1", "z1_2", "z2_2")
    g = poly_parse("2*(z1_1*z2_1 + z1_1^2 + 2*z1_1*z2_1 + z2_1^2)*(z1_2^2 + z2_2^2)", z)
    assert to_power_sums(g, lam) == poly_parse("(3*p1_1^2 - p2_1)*p2_2", bv.p_flat)


def test_power_sum_in_elementary_examples():
    assert power_sum_in_elementary(1, 1) == poly_parse("e1", ("e1",))
    assert power_sum_in_elementary(2, 2) == poly_parse("e1^2 - 2*e2", ("e1", "e2"))
    assert power_sum_in_elementary(3, 2) == poly_parse("e1^3 - 3*e1*e2", ("e1", "e2"))
    named = power_sum_in_elementary(2, 2, names=E22)
    assert named == poly_parse("e1_1^2 - 2*e2_1", E22)


def test_power_sum_in_elementary_against_expansion():
    # substitute E_j(z) and compare with the power sum itself
    for t in range(1, 5):
        z = tuple(f"z{i}" for i in range(1, t + 1))
        from _support import elementary
        images = [elementary(j, t, z) for j in range(1, t + 1)]
        for j in range(1, 7):
            got = power_sum_in_elementary(j, t).compose(images, z)
            want = poly_parse("+".join(f"{v}^{j}" for v in z), z)
            assert got == want


def _rand_block_shape(rng):
    return Partition.from_parts([rng.randint(1, 3) for _ in range(rng.randint(1, 3))])


def _random_invariant(rng, lam, max_degree):
    """Random sum of products of block power sums, so it is invariant by construction."""
    z = BlockVars.of(lam).z_flat
    out = MultiPoly.zero(z)
    blocks = []
    off = 0
    for _, t in lam.blocks:
        blocks.append(z[off:off + t])
        off += t
    for _ in range(rng.randint(1, 4)):
        term = MultiPoly.const(Fraction(rng.randint(-7, 7) or 1, rng.randint(1, 3)), z)
        budget = rng.randint(0, max_degree)
        while budget > 0:
            blk = rng.choice(blocks)
            j = rng.randint(1, min(budget, 3))
            term = term * poly_parse("+".join(f"{v}^{j}" for v in blk), z)
            budget -= j
        out = out + term
    return out


@pytest.mark.parametrize("shape", ["1^1", "1^3", "1^5", "1^2,2^1", "1^2,2^3"])
def test_rewriting_round_trip(shape):
    lam = P(shape)
    rng = random.Random(hash(shape) & 0xFFFF)
    for _ in range(8):
        g = _random_invariant(rng, lam, 6)
        zeta = to_elementary(g, lam)
        gamma = to_power_sums(g, lam)
        assert substitute_elementary(zeta, lam) == g
        assert substitute_power_sums(gamma, lam) == g


def test_fiber_polynomials_worked_shape():
    lam = P("2^2")
    v = UniPoly([-27, 60, 62, -360, 200])
    c1, c2 = UniPoly([1, 2]), UniPoly([3, 0, 1])
    R = ZeroDimParam(v, [c1, c2], [1, 0], E22)
    (rho,) = fiber_polynomials(R, lam)
    assert rho.coeffs[2] == v.diff()
    assert rho.coeffs[1] == -c1
    assert rho.coeffs[0] == c2


def test_fiber_polynomials_linear_block():
    v = UniPoly([-2, 0, 1])
    R = ZeroDimParam(v, [UniPoly([5, 1])], [1], ("e1_1",))
    (rho,) = fiber_polynomials(R, P("3^1"))
    assert list(rho.coeffs) == [UniPoly([-5, -1]), v.diff()]


def test_fiber_polynomials_recover_elementary_values():
    # points (e1, e2) = (3, 2) and (5, 6), mu = e1: v = (t-3)(t-5)
    v = UniPoly.from_roots([3, 5])
    vp = v.diff()
    # v_2 interpolates e2 * v'(t) at the two roots
    e2 = UniPoly([-4, 2])  # 2 at t=3, 6 at t=5
    R = ZeroDimParam(v, [(UniPoly([0, 1]) * vp) % v, (e2 * vp) % v], [1, 0], E22)
    (rho,) = fiber_polynomials(R, P("1^2"))
    for tau in (3, 5):
        d = vp.eval(tau)
        u2, u1, u0 = (rho.coeffs[k].eval(tau) / d for k in (2, 1, 0))
        assert u2 == 1 and -u1 == tau and u0 == e2.eval(tau)


def test_fiber_polynomials_mismatch():
    R = ZeroDimParam(UniPoly([0, 1]), [UniPoly([])], [1], ("e1_1",))
    with pytest.raises(ValueError):
        fiber_polynomials(R, P("1^2"))


@given(st.integers(1, 4), st.integers(1, 8))
@settings(max_examples=30, deadline=None)
def test_newton_consistency_property(t, j):
    # e-coordinates of P_j equal the Newton expression, for a single block of size t
    lam = Partition(((1, t),))
    z = BlockVars.of(lam).z_flat
    g = poly_parse("+".join(f"{v}^{j}" for v in z), z)
    assert to_elementary(g, lam) == power_sum_in_elementary(j, t, names=BlockVars.of(lam).e_flat)

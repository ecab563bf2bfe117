"""Univariate real root counting over Q: Sturm sequences and Tarski queries."""

from fractions import Fraction

from ..algebra import UniPoly
from ..algebra.unipoly import is_squarefree, positive_primitive, prem_positive, squarefree_part


def sign(x):
    return (x > 0) - (x < 0)


def signed_remainder_sequence(P, Q):
    """P, Q, -Rem(P, Q), ... down to the last nonzero element.

    Entries past the first two are returned as positive multiples of the true
    remainders, which leaves every sign variation count unchanged.
    """
    if not Q:
        return [P] if P else []
    seq = [P, Q]
    a, b = positive_primitive(P), positive_primitive(Q)
    while True:
        r = prem_positive(a, b)
        if not r:
            break
        r = [-x for x in r]
        seq.append(UniPoly._raw([Fraction(x) for x in r], P.var))
        a, b = b, r
    return seq


def sign_variations(values):
    signs = [s for s in (sign(v) for v in values) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _var_at_inf(seq, positive):
    vals = [p.sign_at_pos_inf() if positive else p.sign_at_neg_inf() for p in seq if p]
    return sign_variations(vals)


def _var_at(seq, x):
    return sign_variations([p.eval(x) for p in seq if p])


def sturm_sequence(p):
    return signed_remainder_sequence(p, p.diff())


def count_real_roots(v):
    """Number of distinct real roots of a nonzero polynomial."""
    if not v:
        raise ValueError("the zero polynomial has infinitely many roots")
    if v.degree <= 0:
        return 0
    seq = sturm_sequence(v)
    return _var_at_inf(seq, False) - _var_at_inf(seq, True)


def count_roots_in(v, a, b, seq=None):
    """Distinct real roots of v in the half-open interval (a, b]."""
    seq = seq or sturm_sequence(_distinct(v))
    return _var_at(seq, a) - _var_at(seq, b)


def tarski_query(Q, P):
    """sum over real roots x of P of sign(Q(x))."""
    if not P or P.degree <= 0:
        return 0
    Qr = Q % P if Q.degree >= P.degree else Q
    R = P.diff() * Qr
    if not R:
        return 0
    seq = signed_remainder_sequence(P, R)
    return _var_at_inf(seq, False) - _var_at_inf(seq, True)


def root_bound(p):
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def _distinct(p):
    return p if is_squarefree(p) else squarefree_part(p)


def isolate_real_roots(p):
    """Disjoint isolating intervals (lo, hi], ascending; lo == hi marks an exact root."""
    if not p or p.degree <= 0:
        return []
    # a repeated root makes every Sturm entry vanish there, so count on the squarefree part
    p = _distinct(p)
    seq = sturm_sequence(p)
    B = Fraction(root_bound(p)).limit_denominator(1) + 1
    out = []
    stack = [(-B, B, count_roots_in(p, -B, B, seq))]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            if p.eval(hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = count_roots_in(p, lo, mid, seq)
        stack.append((mid, hi, cnt - left))
        stack.append((lo, mid, left))
    out.sort(key=lambda iv: iv[0])
    return out


def refine_to_width(p, lo, hi, width):
    """Bisect an isolating interval (lo, hi] of a simple root until hi - lo <= width."""
    if lo == hi:
        return lo, hi
    # p(lo) may vanish at a neighbouring root; the sign just right of lo is -sign(p(hi))
    slo = -p.sign_at(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def real_root_sign_at_isolated(q, p, lo, hi, max_steps=4000):
    """Sign of q at the unique root of squarefree p in (lo, hi]; exact."""
    if lo == hi:
        return q.sign_at(lo)
    from ..algebra import poly_gcd

    g = poly_gcd(p, q)
    if g.degree >= 1 and count_roots_in(g, lo, hi) == 1:
        return 0
    qs = q // poly_gcd(q, q.diff()) if q.degree >= 1 else q
    qseq = sturm_sequence(qs) if qs.degree >= 1 else None
    for _ in range(max_steps):
        if qseq is None or count_roots_in(qs, lo, hi, qseq) == 0:
            return q.sign_at(hi)
        lo2, hi2 = refine_to_width(p, lo, hi, (hi - lo) / 2)
        if lo2 == hi2:
            return q.sign_at(lo2)
        lo, hi = lo2, hi2
    raise ArithmeticError("sign refinement did not converge")

"""Sturm-Habicht sequences in Q[t][u] and real root counts over real algebraic t."""

from dataclasses import dataclass

from ..algebra import BiPoly, UniPoly
from .sturm import count_real_roots
from .thom import signs_at_roots


def _eps(k):
    return -1 if (k * (k - 1) // 2) % 2 else 1


def _rem_scaled(num, den, B):
    """Exact Rem(num, B) / den in Q[t][u], computed with pseudo-division.

    ``num`` and ``B`` are BiPoly, ``den`` a UniPoly; the quotient is known to be
    polynomial in t.
    """
    e = num.degree_u - B.degree_u + 1
    if e <= 0:
        return num.divide_scalar(den)
    return num.prem(B).divide_scalar(den * B.lc ** e)


@dataclass(frozen=True)
class SturmHabichtSeq:
    source: BiPoly
    derivative: BiPoly
    sequence: tuple  # sResP_p, ..., sResP_0 (index l holds degree p - l); zero entries kept
    principal_coeffs: tuple  # sRes_p, ..., sRes_0 as UniPoly in t

    @property
    def degree(self):
        return self.source.degree_u


def sturm_habicht(rho):
    """Signed subresultant sequence of (rho, d rho / du) with exact Q[t] coefficients."""
    if not rho:
        raise ValueError("zero polynomial")
    p = rho.degree_u
    if p < 1:
        raise ValueError("rho must have positive degree in u")
    Q = rho.diff_u()
    zero_t = UniPoly([], rho.tvar)
    one_t = UniPoly([1], rho.tvar)
    zero = BiPoly([], rho.tvar, rho.uvar)

    sresp = {p: rho, p - 1: Q}
    s = {p: one_t}
    t = {p: one_t, p - 1: Q.lc}
    s[p - 1] = Q.lc
    i, j = p + 1, p
    while sresp.get(j - 1, zero):
        A = sresp[j - 1]
        k = A.degree_u
        if k == j - 1:
            s[j - 1] = t[j - 1]
            if k == 0:
                i, j = j, k
                break
            num = sresp[i - 1] * (s[j - 1] * s[j - 1])
            nxt = -_rem_scaled(num, s[j] * t[i - 1], A)
        else:
            s[j - 1] = zero_t
            for d in range(1, j - k):
                t[j - d - 1] = (t[j - 1] * t[j - d]).exact_div(s[j]) * (-1) ** d
            s[k] = t[k]
            for l in range(j - 2, k, -1):
                sresp[l] = zero
            sresp[k] = (A * s[k]).divide_scalar(t[j - 1])
            if k == 0:
                i, j = j, k
                break
            num = sresp[i - 1] * (t[j - 1] * s[k])
            nxt = -_rem_scaled(num, s[j] * t[i - 1], A)
        sresp[k - 1] = nxt
        t[k - 1] = nxt.lc
        i, j = j, k
    # entries below the last nonzero one vanish, as do their principal coefficients
    seq, pcs = [], []
    for l in range(p, -1, -1):
        P = sresp.get(l, zero)
        seq.append(P)
        if l == p:
            pcs.append(rho.lc)
        else:
            pcs.append(s.get(l, zero_t) if P else zero_t)
    return SturmHabichtSeq(rho, Q, tuple(seq), tuple(pcs))


def pmv(signs):
    """Permanences minus variations of a sign list ordered from top degree down."""
    idx = [k for k, x in enumerate(signs) if x]
    total = 0
    for a, b in zip(idx, idx[1:]):
        gap = b - a
        if gap % 2:
            total += _eps(gap) * signs[a] * signs[b]
    return total


def _truncate_at(rho, vanish):
    """Drop leading u-coefficients that vanish at the chosen root (flags from top)."""
    cs = list(rho.coeffs)
    for z in vanish:
        if not z:
            break
        cs.pop()
    return BiPoly(cs, rho.tvar, rho.uvar)


def fiber_counts(rho, v):
    """Distinct real roots of rho(theta, u) for every real root theta of squarefree v, ascending.

    Returns a list of (ThomEncoding, count).
    """
    if v.degree < 1:
        return []
    if rho.degree_u < 1:
        return [(e, 0) for e, _ in signs_at_roots(v, [])]
    return _fiber_counts(rho, v, sturm_habicht(rho))


def _fiber_counts(rho, v, S):
    pcs = list(S.principal_coeffs)
    lead = list(reversed(rho.coeffs))
    rows = signs_at_roots(v, pcs + lead)
    out = []
    npc = len(pcs)
    for enc, sg in rows:
        lead_signs = sg[npc:]
        if lead_signs[0] != 0:
            out.append((enc, pmv(list(sg[:npc]))))
            continue
        # degree drops at theta: recount with the truncated polynomial
        trunc = _truncate_at(rho, [x == 0 for x in lead_signs])
        out.append((enc, _single(trunc, v, enc.root_index)))
    return out


def _single(rho, v, index):
    if not rho:
        raise ArithmeticError("fiber polynomial vanishes identically at the root")
    if rho.degree_u < 1:
        return 0
    return dict((e.root_index, c) for e, c in fiber_counts(rho, v))[index]


def fiber_real_root_count(S, theta):
    """Real roots (without multiplicity) of rho(theta, u) for the Thom-encoded root theta."""
    for enc, cnt in _fiber_counts(S.source, theta.polynomial, S):
        if enc.signs == theta.signs:
            return cnt
    raise ValueError("theta is not a real root of its polynomial")


def fiber_count_rational(rho, r):
    """Same count at a rational point t = r, by substitution and a univariate Sturm count."""
    f = rho.eval_t(r)
    if not f:
        raise ArithmeticError("fiber polynomial vanishes identically at the root")
    return count_real_roots(f) if f.degree >= 1 else 0

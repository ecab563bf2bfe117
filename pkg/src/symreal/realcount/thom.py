"""Sign determination at the real roots of a univariate polynomial, and Thom encodings.

Sign conditions of a list of polynomials on the zero set of P are found
from Tarski queries: for an adapted family A of exponent vectors the
matrix of signs M(A, Sigma) is invertible and M . c = TaQ(Q^A, P) gives
the number of roots realizing each candidate sign condition.
"""

from dataclasses import dataclass
import functools
from fractions import Fraction

from ..algebra import UniPoly
from ..algebra.unipoly import is_squarefree
from .sturm import positive_primitive, prem_positive, tarski_query

_SIGNS = (0, 1, -1)


def _sign_power(sig, e):
    if e == 0:
        return 1
    if sig == 0:
        return 0
    return sig if e % 2 else 1


def _row(alpha, sigma):
    out = 1
    for e, s in zip(alpha, sigma):
        out *= _sign_power(s, e)
        if not out:
            return 0
    return out


def _solve(M, b):
    """Solve the square rational system M x = b exactly."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(M, b)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c])
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[r][n] for r in range(n)]


def _independent_rows(rows, want):
    """Indices of the first ``want`` linearly independent rows (greedy, in order)."""
    basis = []  # (pivot, row)
    chosen = []
    for idx, row in enumerate(rows):
        r = [Fraction(x) for x in row]
        for piv, b in basis:
            if r[piv]:
                f = r[piv] / b[piv]
                r = [x - f * y for x, y in zip(r, b)]
        nz = next((i for i, x in enumerate(r) if x), None)
        if nz is not None:
            basis.append((nz, r))
            chosen.append(idx)
            if len(chosen) == want:
                break
    if len(chosen) != want:
        raise ArithmeticError("could not complete an adapted family of exponents")
    return chosen


class SignDetermination:
    """Realizable sign conditions of Q_1..Q_m on the real zeros of P."""

    def __init__(self, P):
        if not P or P.degree < 1:
            raise ValueError("P must have positive degree")
        self.P = P
        self._Pint = positive_primitive(P)
        self._products = {(): UniPoly([1], P.var)}
        self._taq = {}
        self.queries = 0

    def _product(self, polys, alpha):
        key = tuple(alpha)
        while key and key[-1] == 0:
            key = key[:-1]
        if key in self._products:
            return self._products[key]
        last = len(key) - 1
        prev = key[:last] + (key[last] - 1,)
        # positive rescaling does not change a Tarski query
        prod = self._product(polys, prev) * polys[last]
        r = prem_positive(positive_primitive(prod), self._Pint)
        out = UniPoly._raw([Fraction(x) for x in r], self.P.var)
        self._products[key] = out
        return out

    def _query(self, polys, alpha):
        key = tuple(alpha)
        while key and key[-1] == 0:
            key = key[:-1]
        if key not in self._taq:
            self._taq[key] = tarski_query(self._product(polys, key), self.P)
            self.queries += 1
        return self._taq[key]

    def run(self, polys):
        """Return a list of (sign vector, count) for the realizable conditions."""
        polys = [q % self.P for q in polys]
        total = self._query(polys, ())
        if total == 0:
            return []
        sigmas, alphas, counts = [()], [()], [total]
        for i in range(len(polys)):
            cand_s = [s + (x,) for s in sigmas for x in _SIGNS]
            cand_a = [a + (e,) for a in alphas for e in (0, 1, 2)]
            taq = [self._query(polys, a) for a in cand_a]
            M = [[_row(a, s) for s in cand_s] for a in cand_a]
            c = _solve(M, taq)
            keep = [j for j, x in enumerate(c) if x]
            sigmas = [cand_s[j] for j in keep]
            counts = [int(c[j]) for j in keep]
            rows = [[_row(a, s) for s in sigmas] for a in cand_a]
            alphas = [cand_a[j] for j in _independent_rows(rows, len(sigmas))]
        return list(zip(sigmas, counts))


@dataclass(frozen=True)
class ThomEncoding:
    polynomial: UniPoly
    root_index: int
    signs: tuple  # signs of v', v'', ..., v^(deg-1) at the root


def thom_compare(s1, s2):
    """-1 if the root encoded by s1 is smaller than the one encoded by s2, +1 if larger.

    ``s1``/``s2`` list signs of P', P'', ..., P^(d-1) (P^(d) is a nonzero constant).
    """
    if s1 == s2:
        return 0
    d1 = list(s1) + [1]
    d2 = list(s2) + [1]
    k = max(i for i in range(len(s1)) if s1[i] != s2[i])
    nxt = d1[k + 1]
    if nxt == 0:
        raise ValueError("inconsistent Thom encodings")
    less = s1[k] < s2[k]
    if nxt > 0:
        return -1 if less else 1
    return 1 if less else -1


def derivative_list(v):
    return [v.diff(k) for k in range(1, v.degree)]


def thom_encode(v):
    """Thom encodings of the real roots of a squarefree v, ascending."""
    if not v:
        raise ValueError("zero polynomial")
    if not is_squarefree(v):
        raise ValueError("Thom encoding requires a squarefree polynomial")
    if v.degree < 1:
        return []
    v = v.primitive()
    conds = SignDetermination(v).run(derivative_list(v))
    return _sorted_encodings(v, [s for s, _ in conds])


def _sorted_encodings(v, sign_vectors):
    lc_sign = 1 if v.lc > 0 else -1
    # thom_compare assumes a positive leading coefficient for the top derivative
    adj = [tuple(x * lc_sign for x in s) for s in sign_vectors]
    order = sorted(range(len(adj)), key=functools.cmp_to_key(lambda i, j: thom_compare(adj[i], adj[j])))
    return [ThomEncoding(v, idx, tuple(sign_vectors[i])) for idx, i in enumerate(order)]


def signs_at_roots(v, polys):
    """For each real root of squarefree v (ascending), its Thom encoding and the signs of polys.

    Returns a list of (ThomEncoding, tuple of signs of ``polys``).
    """
    if v.degree < 1:
        return []
    v = v.primitive()
    derivs = derivative_list(v)
    conds = SignDetermination(v).run(derivs + list(polys))
    nd = len(derivs)
    by_thom = {}
    for s, cnt in conds:
        if cnt != 1:
            raise ArithmeticError("sign conditions on derivatives did not separate the roots")
        by_thom[s[:nd]] = s[nd:]
    encs = _sorted_encodings(v, list(by_thom))
    return [(e, by_thom[e.signs]) for e in encs]

"""Buchberger's algorithm over Q in graded reverse lexicographic order.

Polynomials are handled internally as dicts ``{exponent tuple: coefficient}``
with gmpy2 rationals when available. Pair handling follows the
Gebauer-Moeller update with the sugar selection strategy.
"""

from fractions import Fraction
import heapq

from ..algebra import MultiPoly

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _Q = Fraction


def to_internal(p):
    return {m: _Q(c.numerator, c.denominator) for m, c in p.terms.items()}


def to_fraction(c):
    return Fraction(int(c.numerator), int(c.denominator))


def from_internal(terms, vars):
    return MultiPoly(vars, {m: to_fraction(c) for m, c in terms.items()})


def _key(m):
    # heapq pops the smallest key first: that must be the grevlex-largest monomial
    return (-sum(m), tuple(reversed(m)))


def lead(terms):
    return min(terms, key=_key)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class _Basis:
    """Monic polynomials with cached leading monomials."""

    def __init__(self):
        self.polys = []
        self.lms = []
        self.sugar = []
        self.tails = []

    def add(self, terms, sugar):
        lm = lead(terms)
        inv = 1 / terms[lm]
        terms = {m: c * inv for m, c in terms.items()}
        self.polys.append(terms)
        self.lms.append(lm)
        self.sugar.append(sugar)
        self.tails.append([(m, c) for m, c in terms.items() if m != lm])
        return len(self.polys) - 1


def reduce_full(terms, basis, active):
    """Fully reduce ``terms`` modulo the active basis elements; returns a new dict."""
    f = dict(terms)
    heap = [_key(m) for m in f]
    heapq.heapify(heap)
    out = {}
    lms = basis.lms
    reducers = [(lms[i], basis.tails[i]) for i in active]
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        k = pop(heap)
        m = tuple(reversed(k[1]))
        # stale duplicates: reduction only ever adds monomials smaller than m
        c = f.pop(m, None)
        if c is None:
            continue
        for lm, tail in reducers:
            if divides(lm, m):
                q = _sub(m, lm)
                for mm, cc in tail:
                    mon = _add(mm, q)
                    v = f.get(mon)
                    if v is None:
                        f[mon] = -c * cc
                        push(heap, _key(mon))
                    else:
                        v = v - c * cc
                        if v:
                            f[mon] = v
                        else:
                            del f[mon]
                break
        else:
            out[m] = c
    return out


def _spoly(basis, i, j):
    lmi, lmj = basis.lms[i], basis.lms[j]
    L = lcm(lmi, lmj)
    qi, qj = _sub(L, lmi), _sub(L, lmj)
    out = {}
    for m, c in basis.tails[i]:
        out[_add(m, qi)] = c
    for m, c in basis.tails[j]:
        mm = _add(m, qj)
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    sugar = max(basis.sugar[i] + sum(qi), basis.sugar[j] + sum(qj))
    return out, sugar


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class GroebnerStats:
    def __init__(self):
        self.pairs_reduced = 0
        self.zero_reductions = 0
        self.max_basis = 0


def groebner_internal(polys, nvars, stats=None):
    """Reduced Groebner basis of internal dict polynomials (monic, ascending lm)."""
    basis = _Basis()
    active = []
    pairs = []  # heap of (sugar, lcm key, counter, i, j)
    counter = 0
    stats = stats or GroebnerStats()

    def update(h):
        nonlocal active, pairs, counter
        lmh = basis.lms[h]
        C = [(g, lcm(basis.lms[g], lmh)) for g in active]
        D = []
        while C:
            g1, L1 = C.pop()
            if _coprime(basis.lms[g1], lmh) or not any(
                    divides(L2, L1) for _, L2 in C) and not any(divides(L2, L1) for _, L2 in D):
                D.append((g1, L1))
        E = [(g, L) for g, L in D if not _coprime(basis.lms[g], lmh)]
        kept = []
        for item in pairs:
            _, _, _, i, j, L = item
            if divides(lmh, L) and lcm(basis.lms[i], lmh) != L and lcm(basis.lms[j], lmh) != L:
                continue
            kept.append(item)
        for g, L in E:
            qg = _sub(L, basis.lms[g])
            qh = _sub(L, lmh)
            sugar = max(basis.sugar[g] + sum(qg), basis.sugar[h] + sum(qh))
            counter += 1
            kept.append((sugar, _key(L), counter, g, h, L))
        heapq.heapify(kept)
        pairs = kept
        active = [g for g in active if not divides(lmh, basis.lms[g])] + [h]
        stats.max_basis = max(stats.max_basis, len(active))

    inputs = [p for p in polys if p]
    inputs.sort(key=lambda p: _key(lead(p)), reverse=True)
    for p in inputs:
        r = reduce_full(p, basis, active)
        if r:
            sugar = max(sum(m) for m in p)
            h = basis.add(r, sugar)
            if not any(h_m for h_m in basis.lms[h]):
                return [{(0,) * nvars: _Q(1)}]
            update(h)

    while pairs:
        sugar, _, _, i, j, _ = heapq.heappop(pairs)
        s, sug = _spoly(basis, i, j)
        stats.pairs_reduced += 1
        if not s:
            stats.zero_reductions += 1
            continue
        r = reduce_full(s, basis, active)
        if not r:
            stats.zero_reductions += 1
            continue
        h = basis.add(r, max(sug, sugar))
        if not any(basis.lms[h]):
            return [{(0,) * nvars: _Q(1)}]
        update(h)

    # minimal basis, then inter-reduce
    minimal = [g for g in active
               if not any(o != g and divides(basis.lms[o], basis.lms[g]) and
                          (basis.lms[o] != basis.lms[g] or o < g) for o in active)]
    reduced = []
    for g in minimal:
        others = [o for o in minimal if o != g]
        lm = basis.lms[g]
        tail = {m: c for m, c in basis.polys[g].items() if m != lm}
        tail = reduce_full(tail, basis, others) if tail else {}
        tail[lm] = _Q(1)
        reduced.append(tail)
    reduced.sort(key=lambda p: _key(lead(p)), reverse=True)
    return reduced


def groebner(polys, vars=None, stats=None):
    """Reduced grevlex Groebner basis of MultiPoly inputs (returned as MultiPoly)."""
    polys = list(polys)
    if not polys:
        return []
    vars = tuple(vars) if vars is not None else polys[0].vars
    internal = [to_internal(p.embed(vars)) for p in polys]
    G = groebner_internal(internal, len(vars), stats)
    return [from_internal(g, vars) for g in G]


class NormalForm:
    """Normal forms modulo a reduced Groebner basis given as internal dicts."""

    def __init__(self, gb):
        self.basis = _Basis()
        for g in gb:
            self.basis.add(g, sum(lead(g)))
        self.active = list(range(len(gb)))

    @property
    def lms(self):
        return self.basis.lms

    def reduce(self, terms):
        return reduce_full(terms, self.basis, self.active)

    def is_unit(self):
        return any(not any(m) for m in self.basis.lms)

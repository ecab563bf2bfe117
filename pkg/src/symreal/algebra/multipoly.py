"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction
from itertools import product as _cartesian
from operator import add as _add

Rational = Fraction


def as_rational(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def grevlex_key(mon):
    """Sort key: larger key means larger monomial in graded reverse lex order."""
    return (sum(mon), tuple(-e for e in reversed(mon)))


class MultiPoly:
    """Immutable sparse polynomial over an ordered tuple of variable names.

    ``terms`` maps exponent tuples to nonzero :class:`Fraction` coefficients.
    Two polynomials are equal when they share variables and terms; the
    printed form lists terms in graded reverse lexicographic order.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars, terms=None, _trusted=False):
        self.vars = tuple(vars)
        if _trusted:
            self.terms = terms
        else:
            n = len(self.vars)
            clean = {}
            for mon, c in (terms or {}).items():
                mon = tuple(mon)
                if len(mon) != n:
                    raise ValueError(f"exponent {mon} does not match {n} variables")
                if any(e < 0 for e in mon):
                    raise ValueError(f"negative exponent in {mon}")
                c = as_rational(c)
                if c:
                    clean[mon] = clean.get(mon, 0) + c
            self.terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, vars):
        return cls(vars, {}, _trusted=True)

    @classmethod
    def const(cls, c, vars):
        vars = tuple(vars)
        c = as_rational(c)
        return cls(vars, {(0,) * len(vars): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, name, vars):
        vars = tuple(vars)
        i = vars.index(name)
        mon = tuple(1 if k == i else 0 for k in range(len(vars)))
        return cls(vars, {mon: Fraction(1)}, _trusted=True)

    # basic queries
    @property
    def nvars(self):
        return len(self.vars)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, name):
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def weighted_degree(self, weights):
        return max((sum(w * e for w, e in zip(weights, m)) for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mon = max(self.terms, key=grevlex_key)
        return mon, self.terms[mon]

    def variables_used(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.vars[i] for i in sorted(used)]

    # comparison
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.vars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly(self.vars, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return MultiPoly.zero(self.vars)
        return MultiPoly(self.vars, {m: c * v for m, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(_add, m1, m2))
                terms[m] = get(m, 0) + c1 * c2
        return MultiPoly(self.vars, {m: c for m, c in terms.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(1 / as_rational(c))
        return NotImplemented

    # calculus and evaluation
    def diff(self, name):
        i = self.vars.index(name)
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                terms[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return MultiPoly(self.vars, terms, _trusted=True)

    def __call__(self, *point):
        return self.eval(point)

    def eval(self, point):
        point = [as_rational(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        powers = [{} for _ in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    if e not in cache:
                        cache[e] = point[i] ** e
                    val *= cache[e]
            total += val
        return total

    def eval_partial(self, assignment):
        """Substitute rational values for some variables; keeps the variable tuple."""
        idx = {self.vars.index(k): as_rational(v) for k, v in assignment.items()}
        terms = {}
        for m, c in self.terms.items():
            val = c
            mm = list(m)
            for i, x in idx.items():
                if mm[i]:
                    val *= x ** mm[i]
                    mm[i] = 0
            if val:
                key = tuple(mm)
                terms[key] = terms.get(key, 0) + val
        return MultiPoly(self.vars, terms)

    def compose(self, images, target_vars):
        """Substitute ``images[k]`` (MultiPoly over target_vars) for the k-th variable."""
        if len(images) != self.nvars:
            raise ValueError("one image per variable is required")
        target_vars = tuple(target_vars)
        caches = [{0: MultiPoly.const(1, target_vars), 1: img} for img in images]

        def power(i, e):
            cache = caches[i]
            if e not in cache:
                half = power(i, e // 2)
                p = half * half
                cache[e] = p * images[i] if e % 2 else p
            return cache[e]

        result = {}
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if e:
                    term = power(i, e) if term is None else term * power(i, e)
            if term is None:
                key = (0,) * len(target_vars)
                result[key] = result.get(key, 0) + c
                continue
            for mm, cc in term.terms.items():
                result[mm] = result.get(mm, 0) + c * cc
        return MultiPoly(target_vars, {m: c for m, c in result.items() if c}, _trusted=True)

    def embed(self, new_vars):
        """Re-express over ``new_vars`` (must contain every variable actually used)."""
        new_vars = tuple(new_vars)
        if new_vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(new_vars)}
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        for i in used:
            if self.vars[i] not in pos:
                raise ValueError(f"variable {self.vars[i]!r} missing from target variables")
        n = len(new_vars)
        mapping = [pos.get(v) for v in self.vars]
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for i, e in enumerate(m):
                if e:
                    mm[mapping[i]] += e
            terms[tuple(mm)] = c
        return MultiPoly(new_vars, terms, _trusted=True)

    def permute_exponents(self, perm):
        """Return the polynomial with variable ``perm[k]`` substituted for variable ``k``."""
        n = self.nvars
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * n
            for k, e in enumerate(m):
                mm[perm[k]] = e
            terms[tuple(mm)] = c
        return MultiPoly(self.vars, terms, _trusted=True)

    def content_primitive(self):
        """Return (content, primitive part) with integer primitive coefficients."""
        from math import gcd

        if not self.terms:
            return Fraction(0), self
        lcm = 1
        for c in self.terms.values():
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, c.numerator * (lcm // c.denominator))
        _, lc = self.leading_term()
        if lc < 0:
            g = -g
        cont = Fraction(g, lcm)
        return cont, self.scale(1 / cont)

    # display
    def __repr__(self):
        return f"MultiPoly({str(self)!r}, vars={list(self.vars)})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(self.vars, m) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p, point):
    """Exact value of ``p`` at a rational point."""
    return p.eval(point)


def monomials_of_degree(nvars, degree):
    """All exponent tuples of the given total degree (used by random generators)."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def all_exponents(nvars, max_degree):
    return [m for d in range(max_degree + 1) for m in monomials_of_degree(nvars, d)]


def cartesian_exponents(bounds):
    return list(_cartesian(*(range(b + 1) for b in bounds)))

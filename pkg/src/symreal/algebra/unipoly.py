"""Dense univariate polynomials over Q.

Coefficients are stored low degree first. The zero polynomial has an empty
coefficient list and degree -1.
"""

from fractions import Fraction
from math import gcd, lcm

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _Q = Fraction

from .multipoly import MultiPoly, as_rational


def _strip(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class UniPoly:
    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=(), var="t"):
        self.var = var
        self.coeffs = tuple(_strip([as_rational(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs, var):
        p = cls.__new__(cls)
        p.var = var
        p.coeffs = tuple(_strip(list(coeffs)))
        return p

    @classmethod
    def monomial(cls, k, c=1, var="t"):
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots, var="t"):
        p = cls([1], var)
        for r in roots:
            p = p * cls([-as_rational(r), 1], var)
        return p

    @classmethod
    def from_multipoly(cls, p):
        if p.nvars != 1:
            used = p.variables_used()
            if len(used) > 1:
                raise ValueError("polynomial is not univariate")
            name = used[0] if used else p.vars[0]
            p = p.embed((name,)) if used else MultiPoly.const(p.constant_term(), (name,))
        deg = p.total_degree()
        coeffs = [Fraction(0)] * (deg + 1)
        for (e,), c in p.terms.items():
            coeffs[e] = c
        return cls._raw(coeffs, p.vars[0])

    def to_multipoly(self, vars=None):
        vars = tuple(vars) if vars else (self.var,)
        i = vars.index(self.var)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                m = [0] * len(vars)
                m[i] = k
                terms[tuple(m)] = c
        return MultiPoly(vars, terms, _trusted=True)

    # queries
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == tuple(_strip([Fraction(other)]))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly._raw([Fraction(other)], self.var)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return UniPoly._raw([], self.var)
            return UniPoly._raw([c * other for c in self.coeffs], self.var)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw([], self.var)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._raw(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly._raw([Fraction(1)], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, c):
        return self * (1 / as_rational(c))

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        if len(self.coeffs) - 1 < db:
            return UniPoly._raw([], self.var), self
        # gmpy2 rationals are much faster than Fraction in this inner loop
        rem = [_Q(c.numerator, c.denominator) for c in self.coeffs]
        bc = [_Q(c.numerator, c.denominator) for c in other.coeffs]
        lc = bc[-1]
        quot = [_Q(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lc
            quot[k - db] = q
            off = k - db
            for j in range(db + 1):
                rem[off + j] -= q * bc[j]
        return UniPoly._raw(_from_q(quot), self.var), UniPoly._raw(_from_q(rem[:db]), self.var)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # calculus and evaluation
    def diff(self, k=1):
        c = list(self.coeffs)
        for _ in range(k):
            c = [c[i] * i for i in range(1, len(c))]
        return UniPoly._raw(c, self.var)

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly._raw([], x.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x):
        v = self.eval(x)
        return (v > 0) - (v < 0)

    def sign_at_pos_inf(self):
        return (self.lc > 0) - (self.lc < 0)

    def sign_at_neg_inf(self):
        s = self.sign_at_pos_inf()
        return s if self.degree % 2 == 0 else -s

    def compose(self, other):
        """self(other(t))."""
        acc = UniPoly._raw([], other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def monic(self):
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def primitive(self):
        """Integer coefficients, content 1, positive leading coefficient."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if ints[-1] < 0:
            g = -g
        return UniPoly._raw([Fraction(x // g) for x in ints], self.var)

    def integer_coeffs(self):
        p = self.primitive()
        return [int(c) for c in p.coeffs]

    def shift_var(self, var):
        return UniPoly._raw(self.coeffs, var)


def _from_q(xs):
    return [Fraction(int(x.numerator), int(x.denominator)) for x in xs]


def positive_primitive(p):
    """Integer coefficient list of c*p for the unique c > 0 making it primitive."""
    cs = p.coeffs
    if not cs:
        return []
    den = 1
    for c in cs:
        den = lcm(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in cs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints]


def _content_free(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            return a
    return [x // g for x in a] if g else a


def prem_positive(a, b):
    """c * (a mod b) with integer lists (low degree first) and some c > 0."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    e = len(a) - len(b) + 1
    if e <= 0:
        return a
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        a = [x * lb for x in a]
        if c:
            off = k - db
            for j in range(db + 1):
                a[off + j] -= c * b[j]
        a.pop()
    if lb < 0 and e % 2:
        a = [-x for x in a]
    while a and not a[-1]:
        a.pop()
    return _content_free(a)


def poly_gcd(a, b):
    """Monic gcd over Q (zero if both inputs vanish), via a primitive remainder sequence."""
    if not b:
        return a.monic()
    if not a:
        return b.monic()
    x, y = positive_primitive(a), positive_primitive(b)
    if len(x) < len(y):
        x, y = y, x
    while True:
        r = prem_positive(x, y)
        if not r:
            break
        x, y = y, r
    return UniPoly._raw([Fraction(c) for c in y], a.var).monic()


def poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1], a.var), UniPoly([], a.var)
    t0, t1 = UniPoly([], a.var), UniPoly([1], a.var)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc
    return r0 / lc, s0 / lc, t0 / lc


def squarefree_part(p):
    """p / gcd(p, p'), normalized to primitive integer coefficients with lc > 0."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    if p.degree == 0:
        return UniPoly([1], p.var)
    g = poly_gcd(p, p.diff())
    return p.exact_div(g).primitive()


def is_squarefree(p):
    if not p:
        return False
    return poly_gcd(p, p.diff()).degree == 0


def invmod(a, m):
    """Inverse of a modulo m (raises if they share a factor)."""
    g, s, _ = poly_xgcd(a % m, m)
    if g.degree != 0:
        raise ArithmeticError("polynomial is not invertible modulo the given modulus")
    return s % m

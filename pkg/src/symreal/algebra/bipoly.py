"""Polynomials in u whose coefficients are univariate polynomials in t."""

from fractions import Fraction

from .unipoly import UniPoly


class BiPoly:
    """Element of Q[t][u]; ``coeffs[k]`` is the UniPoly-in-t coefficient of u^k."""

    __slots__ = ("coeffs", "tvar", "uvar")

    def __init__(self, coeffs, tvar="t", uvar="u"):
        cs = [c if isinstance(c, UniPoly) else UniPoly([c], tvar) for c in coeffs]
        cs = [c.shift_var(tvar) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.tvar = tvar
        self.uvar = uvar

    @property
    def degree_u(self):
        return len(self.coeffs) - 1

    @property
    def degree_t(self):
        return max((c.degree for c in self.coeffs), default=-1)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else UniPoly([], self.tvar)

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return UniPoly([], self.tvar)

    def _new(self, coeffs):
        return BiPoly(coeffs, self.tvar, self.uvar)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            return self._new([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return self._new([])
        out = [UniPoly([], self.tvar)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return self._new(out)

    __rmul__ = __mul__

    def shift_u(self, k):
        return self._new([UniPoly([], self.tvar)] * k + list(self.coeffs))

    def diff_u(self):
        return self._new([self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    def divide_scalar(self, d):
        """Exact division of every coefficient by the UniPoly ``d``."""
        return self._new([c.exact_div(d) for c in self.coeffs])

    def prem(self, other):
        """Pseudo-remainder: lc(other)^(deg self - deg other + 1) * self mod other in u."""
        if not other.coeffs:
            raise ZeroDivisionError("pseudo-division by zero")
        db = other.degree_u
        r = list(self.coeffs)
        e = len(r) - 1 - db + 1
        if e <= 0:
            return self
        lcb = other.lc
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            r = [x * lcb for x in r]
            if c:
                for j in range(db + 1):
                    r[k - db + j] = r[k - db + j] - c * other.coeffs[j]
            r.pop()
        return self._new(r)

    def eval_t(self, x):
        """Specialize t at a rational number: returns a UniPoly in u."""
        return UniPoly([c.eval(x) for c in self.coeffs], self.uvar)

    def eval_u(self, x):
        acc = UniPoly([], self.tvar)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reduce_t(self, m):
        """Reduce every coefficient modulo the UniPoly ``m``."""
        return self._new([c % m for c in self.coeffs])

    def __repr__(self):
        return f"BiPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (self.uvar if k == 1 else f"{self.uvar}^{k}")
            cs = f"({c})"
            parts.append(cs if not mono else f"{cs}*{mono}")
        return " + ".join(parts)

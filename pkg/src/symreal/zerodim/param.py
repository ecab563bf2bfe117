"""Zero-dimensional parametrizations ((v, v_1, ..., v_l), mu) of finite sets.

A point set W is encoded by a squarefree v in Q[t] and coordinate
polynomials v_i of degree < deg v: the points are (v_1(r)/v'(r), ...) for
the roots r of v, and mu(point) = r.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
import json
import random

from ..algebra import MultiPoly, UniPoly, squarefree_part
from ..algebra.unipoly import is_squarefree, invmod
from .groebner import NormalForm, _Q, groebner_internal, to_fraction, to_internal

MAX_MU_RETRIES = 8


@dataclass(frozen=True)
class ZeroDimParam:
    v: UniPoly
    coords: tuple
    mu: tuple
    vars: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "mu", tuple(Fraction(c) for c in self.mu))
        object.__setattr__(self, "vars", tuple(self.vars))

    @property
    def degree(self):
        return self.v.degree

    def point_at(self, root):
        """Coordinates at a rational root of v."""
        d = self.v.diff().eval(root)
        return [c.eval(root) / d for c in self.coords]

    def to_json(self):
        return {
            "v": [_coef_str(c) for c in self.v.coeffs],
            "coords": [[_coef_str(c) for c in vi.coeffs] for vi in self.coords],
            "mu": [_coef_str(c) for c in self.mu],
        }

    @classmethod
    def from_json(cls, data, vars=()):
        v = UniPoly([Fraction(c) for c in data["v"]])
        coords = [UniPoly([Fraction(c) for c in ci]) for ci in data["coords"]]
        return cls(v, coords, [Fraction(c) for c in data["mu"]], vars)

    def dumps(self):
        return json.dumps(self.to_json())


def _coef_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class SolveReport:
    status: str  # "finite", "empty", "non-finite" or "failed"
    param: ZeroDimParam = None
    dimension_evidence: dict = field(default_factory=dict)
    solution_count: int = 0
    retries: int = 0

    @property
    def finite(self):
        return self.status in ("finite", "empty")


# -- quotient algebra ---------------------------------------------------------

def _staircase(lms, nvars):
    """Standard monomials (not divisible by any leading monomial), or None if infinite."""
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return None
    basis = []
    seen = {(0,) * nvars}
    frontier = [(0,) * nvars]
    while frontier:
        nxt = []
        for m in frontier:
            if any(all(a <= b for a, b in zip(lm, m)) for lm in lms):
                continue
            basis.append(m)
            for i in range(nvars):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm not in seen:
                    seen.add(mm)
                    nxt.append(mm)
        frontier = nxt
    basis.sort(key=lambda m: (sum(m), tuple(reversed(m))))
    return basis


class Quotient:
    """Q[x]/I for a zero-dimensional ideal given by its reduced Groebner basis."""

    def __init__(self, gb, nvars):
        self.gb = gb
        self.nvars = nvars
        self.nf = NormalForm(gb)
        self.basis = _staircase(self.nf.lms, nvars)
        self.index = {m: i for i, m in enumerate(self.basis)} if self.basis is not None else {}
        self._mult = {}

    @property
    def dim(self):
        return len(self.basis)

    def vector(self, terms):
        """Coordinate vector (dict index -> coeff) of the normal form of ``terms``."""
        r = self.nf.reduce(terms)
        return {self.index[m]: c for m, c in r.items()}

    def mult_columns(self, var):
        """Columns of multiplication by x_var: column b = NF(x_var * basis[b])."""
        if var not in self._mult:
            cols = []
            for m in self.basis:
                mm = m[:var] + (m[var] + 1,) + m[var + 1:]
                if mm in self.index:
                    cols.append({self.index[mm]: _Q(1)})
                else:
                    cols.append(self.vector({mm: _Q(1)}))
            self._mult[var] = cols
        return self._mult[var]

    def apply_linear(self, mu, vec):
        """Multiply the element ``vec`` by the linear form sum mu_r x_r."""
        out = {}
        for r, coef in enumerate(mu):
            if not coef:
                continue
            cols = self.mult_columns(r)
            for b, x in vec.items():
                s = coef * x
                for i, c in cols[b].items():
                    v = out.get(i, 0) + s * c
                    if v:
                        out[i] = v
                    else:
                        out.pop(i, None)
        return out


class _Krylov:
    """Incremental echelon form of the vectors 1, a, a^2, ... in the quotient."""

    def __init__(self):
        self.rows = []  # (pivot, vec, combo) with combo over powers of a

    def reduce(self, vec, combo):
        vec = dict(vec)
        combo = dict(combo)
        for piv, row, rcombo in self.rows:
            c = vec.get(piv)
            if c:
                f = c / row[piv]
                for i, x in row.items():
                    v = vec.get(i, 0) - f * x
                    if v:
                        vec[i] = v
                    else:
                        vec.pop(i, None)
                for i, x in rcombo.items():
                    v = combo.get(i, 0) - f * x
                    if v:
                        combo[i] = v
                    else:
                        combo.pop(i, None)
        return vec, combo

    def push(self, vec, combo):
        piv = min(vec)
        self.rows.append((piv, vec, combo))


def _minimal_polynomial(Q, mu, want_krylov=False):
    """Minimal polynomial of the linear form mu in Q (as UniPoly in t)."""
    kry = _Krylov()
    vec = {Q.index[(0,) * Q.nvars]: _Q(1)}
    k = 0
    while True:
        red, combo = kry.reduce(vec, {k: _Q(1)})
        if not red:
            coeffs = [Fraction(0)] * (k + 1)
            for i, c in combo.items():
                coeffs[i] = to_fraction(c)
            p = UniPoly(coeffs)
            return (p, kry) if want_krylov else p
        kry.push(red, combo)
        vec = Q.apply_linear(mu, vec)
        k += 1


def _express(kry, vec):
    """Write vec as a polynomial in a using the Krylov echelon rows (must be in their span)."""
    red, combo = kry.reduce(vec, {})
    if red:
        raise ArithmeticError("element is not a polynomial in the separating form")
    # combo holds -(coefficients) of the powers used to cancel vec
    deg = max(combo, default=-1)
    coeffs = [Fraction(0)] * (deg + 1)
    for i, c in combo.items():
        coeffs[i] = -to_fraction(c)
    return UniPoly(coeffs)


def _radical_generators(Q):
    """Squarefree parts of the variables' minimal polynomials not already squarefree."""
    extra = []
    for r in range(Q.nvars):
        unit = [0] * Q.nvars
        unit[r] = 1
        m = _minimal_polynomial(Q, unit)
        if not is_squarefree(m):
            sq = squarefree_part(m)
            terms = {}
            for k, c in enumerate(sq.coeffs):
                if c:
                    mon = [0] * Q.nvars
                    mon[r] = k
                    terms[tuple(mon)] = _Q(c.numerator, c.denominator)
            extra.append(terms)
    return extra


def solve_zero_dim(system, vars=None, seed=0, mu=None, max_retries=MAX_MU_RETRIES):
    """Zero-dimensional parametrization of V(system), or a non-finite/failed report."""
    system = list(system)
    if vars is None:
        vars = system[0].vars if system else ()
    vars = tuple(vars)
    n = len(vars)
    polys = [to_internal(p.embed(vars)) for p in system]
    gb = groebner_internal(polys, n) if polys else []
    if any(len(g) == 1 and not any(next(iter(g))) for g in gb):
        v = UniPoly([1])
        param = ZeroDimParam(v, [UniPoly([]) for _ in vars], mu or [1] + [0] * (n - 1), vars)
        return SolveReport("empty", param, {"groebner_size": 1, "quotient_dim": 0}, 0, 0)
    Q = Quotient(gb, n)
    if Q.basis is None:
        free = [vars[i] for i in range(n)
                if not any(m[i] > 0 and sum(m) == m[i] for m in Q.nf.lms)]
        return SolveReport("non-finite", None, {
            "groebner_size": len(gb),
            "variables_without_pure_power": free,
        })
    evidence = {"groebner_size": len(gb), "quotient_dim": Q.dim}
    extra = _radical_generators(Q)
    if extra:
        gb = groebner_internal(gb + extra, n)
        Q = Quotient(gb, n)
        evidence["radical_dim"] = Q.dim
    npoints = Q.dim

    rng = random.Random(seed)
    candidates = [list(mu)] if mu is not None else [[1] + [0] * (n - 1)]
    retries = 0
    while True:
        form = [_Q(Fraction(c).numerator, Fraction(c).denominator) for c in candidates[-1]]
        minpoly, kry = _minimal_polynomial(Q, form, want_krylov=True)
        if minpoly.degree == npoints:
            break
        if retries >= max_retries:
            evidence["separating_form"] = "not found"
            return SolveReport("failed", None, evidence, npoints, retries)
        retries += 1
        candidates.append([rng.randint(-n - 3 * retries, n + 3 * retries) or 1 for _ in range(n)])
    mu_form = [Fraction(c) for c in candidates[-1]]

    v = minpoly.primitive()
    vp = v.diff()
    coords = []
    for r in range(n):
        unit = {tuple(1 if i == r else 0 for i in range(n)): _Q(1)}
        q = _express(kry, Q.vector(unit))
        coords.append((q * vp) % v)
    evidence["separating_form"] = [str(c) for c in mu_form]
    param = ZeroDimParam(v, coords, mu_form, vars)
    return SolveReport("finite", param, evidence, v.degree, retries)


def _substitute_scaled(p, R):
    """Evaluate p at (v_1/v', ..., v_l/v') with denominators cleared, modulo v.

    Returns v'^deg(p) * p(v_1/v', ...) reduced modulo v.
    """
    v, vp = R.v, R.v.diff()
    D = p.total_degree()
    acc = UniPoly([])
    vp_pows = [UniPoly([1])]
    for _ in range(D):
        vp_pows.append((vp_pows[-1] * vp) % v)
    coord_pows = [[UniPoly([1])] for _ in R.coords]
    for mon, c in p.terms.items():
        term = UniPoly([c])
        for i, e in enumerate(mon):
            while len(coord_pows[i]) <= e:
                coord_pows[i].append((coord_pows[i][-1] * R.coords[i]) % v)
            if e:
                term = (term * coord_pows[i][e]) % v
        term = (term * vp_pows[D - sum(mon)]) % v
        acc = acc + term
    return acc % v


def verify_param(R, system):
    """Exact check of the parametrization invariants against a system."""
    v = R.v
    if not v or v.degree < 0:
        return False
    if v.degree == 0:
        return all(c.is_zero() for c in R.coords)
    if not is_squarefree(v):
        return False
    if any(c.degree >= v.degree for c in R.coords):
        return False
    if len(R.mu) != len(R.coords):
        return False
    vp = v.diff()
    lhs = UniPoly([])
    for m, c in zip(R.mu, R.coords):
        lhs = lhs + c * m
    t = UniPoly([0, 1])
    if (lhs - t * vp) % v:
        return False
    for p in system:
        if R.vars and p.vars != R.vars:
            p = p.embed(R.vars)
        if len(p.vars) != len(R.coords):
            return False
        if _substitute_scaled(p, R):
            return False
    return True


def elementary_symmetric(values, k):
    """E_k of a list of numbers (E_0 = 1)."""
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def c_lambda_bound(lam, degs, delta):
    """deg(g_1)...deg(g_s) * E_{l-s}(delta - w_1, ..., delta - w_l) / (t_1! ... t_k!).

    The w are the weights of the e-variables, 1..t_i in block i; for a
    single block they are 1..l.
    """
    ell = lam.length
    s = len(degs)
    if s > ell:
        raise ValueError("more equations than variables")
    if degs and delta < max(degs):
        raise ValueError("delta must be at least the maximal equation degree")
    weights = [j for t in lam.mults for j in range(1, t + 1)]
    num = prod(degs) * elementary_symmetric([delta - w for w in weights], ell - s)
    val = Fraction(num, prod(factorial(t) for t in lam.mults))
    return int(val) if val.denominator == 1 else val


def rational_roots(v):
    """Rational roots of a squarefree (or any nonzero) UniPoly, ascending."""
    p = v.primitive()
    out = []
    while p.degree >= 1 and not p.coeffs[0]:
        if 0 not in out:
            out.append(Fraction(0))
        p = UniPoly(p.coeffs[1:])
    if p.degree < 1:
        return sorted(out)
    from ..realcount.sturm import isolate_real_roots, refine_to_width

    a = abs(int(p.lc))
    for lo, hi in isolate_real_roots(p):
        if lo == hi:
            out.append(lo)
            continue
        lo, hi = refine_to_width(p, lo, hi, Fraction(1, 2 * a * a))
        if lo == hi:
            out.append(lo)
            continue
        mid = (lo + hi) / 2
        cand = mid.limit_denominator(a)
        if lo <= cand <= hi and p.eval(cand) == 0:
            out.append(cand)
    return sorted(out)

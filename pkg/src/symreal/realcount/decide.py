"""The per-partition decision: does some real root of v carry all-real fibers?

For a block of size t the fiber rho_i(theta, u) has t distinct real roots iff
the permanences-minus-variations count of its Sturm-Habicht principal
coefficients at theta equals t. Those coefficients are polynomials in t, so
one sign determination over the real roots of v answers every block at once.
"""

from ..algebra import UniPoly
from ..symmetry import fiber_polynomials
from .habicht import fiber_count_rational, pmv, sturm_habicht
from .sturm import count_real_roots, positive_primitive
from .thom import SignDetermination

METHODS = ("auto", "thom", "rational")


def _rational_part(v):
    from ..zerodim.param import rational_roots

    roots = rational_roots(v)
    rest = v
    for r in roots:
        rest = rest // UniPoly([-r, 1], v.var)
    return roots, rest


class _SignPlan:
    """Distinct nonconstant polynomials whose signs at theta determine every fiber count."""

    def __init__(self, rhos, v):
        self.polys = []
        self.blocks = []  # per block: list of (index into polys, or a fixed sign)
        seen = {}
        for rho in rhos:
            # the leading coefficient v' never vanishes at a root of squarefree v, so
            # the sequence computed over Q[t] specializes correctly at every theta
            entries = []
            for c in sturm_habicht(rho).principal_coeffs:
                r = c % v
                if r.degree < 1:
                    entries.append(("fixed", (r.lc > 0) - (r.lc < 0) if r else 0))
                    continue
                key = tuple(positive_primitive(r))
                if key not in seen:
                    seen[key] = len(self.polys)
                    self.polys.append(r)
                entries.append(("poly", seen[key]))
            self.blocks.append(entries)

    def counts(self, sigma):
        out = []
        for entries in self.blocks:
            signs = [x if kind == "fixed" else sigma[x] for kind, x in entries]
            out.append(pmv(signs))
        return out


def _algebraic_hit(rhos, lam, w):
    plan = _SignPlan(rhos, w)
    conds = SignDetermination(w).run(plan.polys) if plan.polys else [((), count_real_roots(w))]
    for sigma, _ in conds:
        if plan.counts(sigma) == list(lam.mults):
            return ("algebraic", w, tuple(plan.polys), sigma)
    return None


def decisive_root(R, lam, method="auto"):
    """Describe a real root of v all of whose fibers are fully real, or return None.

    Returns ``("rational", r)`` or ``("algebraic", w, polys, signs)``: in the
    second case the root is any real root of the factor ``w`` of v at which
    ``polys`` take the signs ``signs``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    v = R.v
    if v.degree < 1 or count_real_roots(v) == 0:
        return None
    rhos = fiber_polynomials(R, lam)
    if method == "thom":
        return _algebraic_hit(rhos, lam, v.primitive())
    roots, rest = _rational_part(v)
    for r in roots:
        if all(fiber_count_rational(rho, r) == t for rho, t in zip(rhos, lam.mults)):
            return ("rational", r)
    if method == "rational" or rest.degree < 1 or count_real_roots(rest) == 0:
        return None
    return _algebraic_hit(rhos, lam, rest.primitive())


def decide(R, lam, method="auto"):
    """True when no real root of v has all fibers real (no real point at this orbit type).

    ``auto`` first tries the rational roots of v by direct substitution and
    uses sign determination for the remaining irrational roots; ``rational``
    examines rational roots only and ``thom`` never substitutes.
    """
    return decisive_root(R, lam, method) is None


def fiber_count_table(R, lam, method="thom"):
    """Per real root of v (ascending): the list of fiber real-root counts.

    Slow reference used by the tests; ``thom`` identifies roots by Thom
    encodings, ``rational`` requires all real roots of v to be rational.
    """
    from .habicht import fiber_counts
    from ..zerodim.param import rational_roots

    rhos = fiber_polynomials(R, lam)
    v = R.v.primitive()
    if v.degree < 1:
        return []
    if method == "rational":
        return [[fiber_count_rational(rho, r) for rho in rhos] for r in rational_roots(v)]
    cols = [fiber_counts(rho, v) for rho in rhos]
    return [[col[k][1] for col in cols] for k in range(len(cols[0]))] if cols else []

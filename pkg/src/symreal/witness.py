"""Witness data for a non-empty verdict and its independent exact check.

A witness fixes the orbit type, the parametrization R, a rational interval
isolating one real root theta of v, and for every block rational separators
u_0 < ... < u_t such that rho_i(t, u_k) has constant sign on the theta
interval and alternates in k. The fiber polynomial therefore has t distinct
real roots at theta, which gives a real point of V(f).
"""

from fractions import Fraction

import numpy as np

from .algebra import UniPoly
from .realcount.sturm import (count_roots_in, isolate_real_roots, real_root_sign_at_isolated,
                              refine_to_width, sturm_sequence)
from .symmetry import Partition, apply_T_lambda, fiber_polynomials, to_elementary
from .zerodim.param import ZeroDimParam, verify_param

MAX_REFINE = 60


def _frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _locate(v, root):
    """Isolating interval (lo, hi] of the designated root of v, and its index."""
    ivs = isolate_real_roots(v)
    if root[0] == "rational":
        r = root[1]
        return (r, r), next(k for k, (lo, hi) in enumerate(ivs) if lo < r <= hi or lo == hi == r)
    _, w, polys, signs = root
    vs = v.primitive()
    for k, (lo, hi) in enumerate(ivs):
        if lo == hi:
            if w.eval(lo):
                continue
        elif count_roots_in(w, lo, hi) == 0:
            continue
        got = tuple(real_root_sign_at_isolated(q, vs, lo, hi) for q in polys)
        if got == tuple(signs):
            return (lo, hi), k
    raise ArithmeticError("no real root of v matches the sign condition")


def _constant_sign_on(p, lo, hi):
    """Sign of the UniPoly p on the closed interval [lo, hi], or 0 if it is not constant."""
    s = p.sign_at(lo)
    if s == 0 or p.sign_at(hi) != s:
        return 0
    if p.degree >= 1 and lo != hi and count_roots_in(p, lo, hi, sturm_sequence(p)) != 0:
        return 0
    return s


def _specialize_u(rho, u):
    return rho.eval_u(UniPoly([u], rho.tvar))


def _separators(rho, lo, hi):
    """Rational u_0 < ... < u_t certifying t real fiber roots over [lo, hi], or None."""
    theta = float((lo + hi) / 2)
    coeffs = [float(c.eval(Fraction(theta))) for c in reversed(rho.coeffs)]
    roots = np.roots(coeffs)
    real = sorted(float(z.real) for z in roots)
    bound = 1 + max(abs(x) for x in real) if real else 1
    cuts = [-bound - 1] + [(a + b) / 2 for a, b in zip(real, real[1:])] + [bound + 1]
    us = [Fraction(c).limit_denominator(10 ** 12) for c in cuts]
    signs = [_constant_sign_on(_specialize_u(rho, u), lo, hi) for u in us]
    if any(s == 0 for s in signs) or any(a == b for a, b in zip(signs, signs[1:])):
        return None
    return us


def _approx_roots(rho, theta):
    coeffs = [float(c.eval(Fraction(theta))) for c in reversed(rho.coeffs)]
    return sorted(float(z.real) for z in np.roots(coeffs))


def build_witness(R, lam, root):
    """Serializable certificate for a real point at orbit type ``lam``.

    ``root`` is the descriptor returned by ``decisive_root``.
    """
    v = R.v
    (lo, hi), index = _locate(v, root)
    rhos = fiber_polynomials(R, lam)
    seps = None
    for _ in range(MAX_REFINE):
        seps = [_separators(rho, lo, hi) for rho in rhos]
        if all(s is not None for s in seps):
            break
        lo, hi = refine_to_width(v, lo, hi, (hi - lo) / 1024)
    else:
        raise ArithmeticError("could not certify the fiber roots")
    # the floating-point reconstruction uses a much tighter interval than the certificate
    plo, phi = refine_to_width(v, lo, hi, Fraction(1, 2 ** 64))
    theta = (plo + phi) / 2
    point = []
    for rho, (size, _) in zip(rhos, lam.blocks):
        for z in _approx_roots(rho, theta):
            point.extend([z] * size)
    return {
        "partition": str(lam),
        "root_index": index,
        "theta_interval": [_frac_str(lo), _frac_str(hi)],
        "param": R.to_json(),
        "separators": [[_frac_str(u) for u in s] for s in seps],
        "point": point,
    }


def check_witness(data, f):
    """Independently confirm a witness against the input system ``f`` (exact).

    Returns True when the certificate proves that V(f) has a real point.
    """
    lam = Partition.parse(data["partition"])
    R = ZeroDimParam.from_json(data["param"])
    v = R.v
    lo, hi = (Fraction(x) for x in data["theta_interval"])
    if lo > hi:
        return False
    if lo == hi:
        if v.eval(lo) != 0:
            return False
    elif v.sign_at(lo) * v.sign_at(hi) >= 0:
        return False
    # R parametrizes points of zeta(T_lambda(f)) = 0 in elementary coordinates
    zeta = [to_elementary(apply_T_lambda(g, lam), lam) for g in f]
    if not verify_param(R, zeta):
        return False
    rhos = fiber_polynomials(R, lam)
    if len(data["separators"]) != len(rhos):
        return False
    for rho, seps, t in zip(rhos, data["separators"], lam.mults):
        us = [Fraction(u) for u in seps]
        if len(us) != t + 1 or any(a >= b for a, b in zip(us, us[1:])):
            return False
        signs = [_constant_sign_on(_specialize_u(rho, u), lo, hi) for u in us]
        if any(s == 0 for s in signs) or any(a == b for a, b in zip(signs, signs[1:])):
            return False
    return True


def point_residual(data, f):
    """max |f_i(x)| at the approximate witness point (floating point)."""
    x = [Fraction(c) for c in data["point"]]
    return max(abs(float(g.eval(x))) for g in f)

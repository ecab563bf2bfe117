"""Invariant objective, random parameters and critical-point systems."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
import hashlib
import random

from .algebra import MultiPoly, det, jacobian, minors_k, rational_rank
from .algebra.unipoly import UniPoly, poly_gcd
from .symmetry import BlockVars, Partition

DEFAULT_BOUND = 2 ** 16


@dataclass(frozen=True)
class ObjectiveSpec:
    partition: Partition
    a: tuple  # per block: (a_{1,i}, ..., a_{t_i,i})
    c: tuple  # per block parity bit: 1 iff t_i odd

    def __post_init__(self):
        lam = self.partition
        a = tuple(tuple(Fraction(x) for x in blk) for blk in self.a)
        if len(a) != lam.k or any(len(blk) != t for blk, t in zip(a, lam.mults)):
            raise ValueError("coefficient blocks do not match the partition")
        c = tuple(int(x) for x in self.c)
        if c != tuple(t % 2 for t in lam.mults):
            raise ValueError("parity bits must be 1 exactly for odd t_i")
        for blk, t in zip(a, lam.mults):
            if t % 2 == 0 and blk[-1] <= 0:
                raise ValueError("a_{t_i,i} must be positive when t_i is even")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def with_coefficients(cls, lam, a):
        return cls(lam, a, tuple(t % 2 for t in lam.mults))


def derive_seed(seed, *labels):
    """Stable 64-bit seed from a base seed and labels (independent of PYTHONHASHSEED)."""
    text = ":".join([str(seed)] + [str(x) for x in labels])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def sample_a(lam, seed, bound=DEFAULT_BOUND):
    """Draw a nonzero integer coefficient vector a for the objective of ``lam``."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    a = []
    for t in lam.mults:
        blk = []
        for j in range(1, t + 1):
            if j == t and t % 2 == 0:
                blk.append(rng.randint(1, bound))
            else:
                x = rng.randint(1, bound)
                blk.append(x if rng.random() < 0.5 else -x)
        a.append(tuple(blk))
    return ObjectiveSpec.with_coefficients(lam, tuple(a))


def build_phi_a(spec):
    """sum_i c_i P_{t_i+1,i} + sum_{i,j} a_{j,i} P_{j,i} over the z-variables."""
    lam = spec.partition
    bv = BlockVars.of(lam)
    zvars = bv.z_flat
    terms = {}
    off = 0
    for (_, t), blk, ci in zip(lam.blocks, spec.a, spec.c):
        powers = [(j, aj) for j, aj in enumerate(blk, start=1)]
        if ci:
            powers.append((t + 1, Fraction(1)))
        for j, coef in powers:
            for r in range(t):
                m = [0] * len(zvars)
                m[off + r] = j
                key = tuple(m)
                terms[key] = terms.get(key, 0) + coef
        off += t
    return MultiPoly(zvars, terms)


@dataclass(frozen=True)
class CriticalSystem:
    equations: tuple
    s: int
    ell: int
    provenance: dict

    @property
    def vars(self):
        return self.equations[0].vars if self.equations else ()

    def degrees(self):
        return [p.total_degree() for p in self.equations]


def critical_system(zeta_g, zeta_phi, provenance=None):
    """zeta_g followed by the (s+1)-minors of Jac(zeta_g, zeta_phi) over the e-variables."""
    zeta_g = list(zeta_g)
    vars = zeta_phi.vars
    s, ell = len(zeta_g), len(vars)
    if s > ell:
        raise ValueError(f"{s} equations exceed {ell} variables")
    eqs = list(zeta_g)
    if s < ell:
        M = jacobian(zeta_g + [zeta_phi], vars)
        eqs.extend(m for m in minors_k(M, s + 1))
    prov = dict(provenance or {})
    prov.setdefault("degrees", [p.total_degree() for p in zeta_g])
    return CriticalSystem(tuple(eqs), s, ell, prov)


def expected_equation_count(s, ell):
    return s + (comb(ell, s + 1) if s < ell else 0)


# -- probabilistic probe for condition (A) -------------------------------------

def _restrict_to_line(p, base, direction):
    images = [UniPoly([b, d]) for b, d in zip(base, direction)]
    acc = UniPoly([])
    for mon, c in p.terms.items():
        term = UniPoly([c])
        for img, e in zip(images, mon):
            if e:
                term = term * img ** e
        acc = acc + term
    return acc


def _rank_deficient_on_line(f, jac_rows, base, direction):
    """True if some (complex) point of V(f) on the line has Jacobian rank < s."""
    s = len(f)
    h = UniPoly([])
    for p in f:
        h = poly_gcd(h, _restrict_to_line(p, base, direction))
    if not h or h.degree < 1:
        return False
    # every s x s minor restricted to the line must share a root with h
    g = h
    for cols in combinations(range(len(base)), s):
        m = det([[jac_rows[i][j] for j in cols] for i in range(s)])
        r = _restrict_to_line(m, base, direction)
        g = poly_gcd(g, r) if r else g
        if g.degree < 1:
            return False
    return True


def condition_A_probe(f, trials=20, seed=0, points=()):
    """One-sided check of full Jacobian rank on V(f).

    Returns False when a witness of rank deficiency is found: a supplied
    rational point of V(f), or a random rational line along which the
    restricted system and all maximal Jacobian minors share a root.
    True only means no violation was found.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    f = list(f)
    if not f:
        return True
    vars = f[0].vars
    n, s = len(vars), len(f)
    J = jacobian(f, vars)
    for pt in points:
        if all(p.eval(pt) == 0 for p in f):
            vals = [[e.eval(pt) for e in row] for row in J.rows]
            if rational_rank(vals) < s:
                return False
    rng = random.Random(seed)
    lines = [([0] * n, [1] * n)]  # the diagonal through the origin
    for i in range(n):
        d = [0] * n
        d[i] = 1
        lines.append(([0] * n, d))
    while len(lines) < trials + n + 1:
        base = [rng.randint(-9, 9) for _ in range(n)]
        d = [rng.randint(-9, 9) for _ in range(n)]
        if any(d):
            lines.append((base, d))
    for base, d in lines[:trials + n + 1]:
        if _rank_deficient_on_line(f, J.rows, [Fraction(x) for x in base], [Fraction(x) for x in d]):
            return False
    return True

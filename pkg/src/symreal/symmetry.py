"""Partitions, orbit collapse and rewriting of block-invariant polynomials.

Variables for a partition with blocks ``(n_i, t_i)`` are named
``z{j}_{i}``, ``e{j}_{i}`` and ``p{j}_{i}`` (``j`` = position inside block
``i``, both 1-based) and are ordered block by block.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import re

from .algebra import BiPoly, MultiPoly, UniPoly


@dataclass(frozen=True, order=False)
class Partition:
    """A partition (n_1^t_1 ... n_k^t_k) of n with n_1 < ... < n_k."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple((int(a), int(b)) for a, b in self.blocks)
        if not blocks:
            raise ValueError("a partition needs at least one block")
        if any(a <= 0 or b <= 0 for a, b in blocks):
            raise ValueError(f"block sizes and multiplicities must be positive: {blocks}")
        if any(blocks[i][0] >= blocks[i + 1][0] for i in range(len(blocks) - 1)):
            raise ValueError(f"block sizes must be strictly increasing: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_parts(cls, parts):
        counts = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text):
        """Parse ``"2^2"`` or ``"1^2,2^1"`` (a bare ``"3"`` means ``3^1``)."""
        counts = {}
        for chunk in text.replace(" ", "").split(","):
            if not chunk:
                continue
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", chunk)
            if not m:
                raise ValueError(f"bad partition factor {chunk!r} in {text!r}")
            size, mult = int(m.group(1)), int(m.group(2) or 1)
            counts[size] = counts.get(size, 0) + mult
        if not counts:
            raise ValueError(f"empty partition spec {text!r}")
        return cls(tuple(sorted(counts.items())))

    @property
    def n(self):
        return sum(a * b for a, b in self.blocks)

    @property
    def length(self):
        return sum(b for _, b in self.blocks)

    @property
    def k(self):
        return len(self.blocks)

    @property
    def sizes(self):
        return tuple(a for a, _ in self.blocks)

    @property
    def mults(self):
        return tuple(b for _, b in self.blocks)

    def parts(self):
        """Parts in decreasing order, e.g. (3, 1) for 1^1 3^1."""
        out = []
        for a, b in self.blocks:
            out.extend([a] * b)
        return tuple(sorted(out, reverse=True))

    def index_sets(self):
        """0-based positions I_{j,i} of the x-variables collapsing onto z_{j,i}."""
        out = []
        offset = 0
        for a, b in self.blocks:
            block = []
            for _ in range(b):
                block.append(tuple(range(offset, offset + a)))
                offset += a
            out.append(block)
        return out

    def __str__(self):
        return ",".join(f"{a}^{b}" for a, b in self.blocks)


@dataclass(frozen=True)
class BlockVars:
    z: tuple
    e: tuple
    p: tuple
    weights: tuple = field(default=())

    @classmethod
    def of(cls, lam):
        return _block_vars(lam)

    @property
    def z_flat(self):
        return tuple(v for blk in self.z for v in blk)

    @property
    def e_flat(self):
        return tuple(v for blk in self.e for v in blk)

    @property
    def p_flat(self):
        return tuple(v for blk in self.p for v in blk)


@lru_cache(maxsize=None)
def _block_vars(lam):
    z, e, p, w = [], [], [], []
    for i, (_, t) in enumerate(lam.blocks, start=1):
        z.append(tuple(f"z{j}_{i}" for j in range(1, t + 1)))
        e.append(tuple(f"e{j}_{i}" for j in range(1, t + 1)))
        p.append(tuple(f"p{j}_{i}" for j in range(1, t + 1)))
        w.extend(range(1, t + 1))
    return BlockVars(tuple(z), tuple(e), tuple(p), tuple(w))


def partition_key(lam):
    """Iteration order: decreasing length, then parts (descending) lexicographically."""
    return (-lam.length, lam.parts())


def _partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_min_length(n, s):
    """All partitions of n with length >= s, longest first."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [Partition.from_parts(p) for p in _partitions(n, n) if len(p) >= s]
    return sorted(out, key=partition_key)


def apply_T_lambda(f, lam):
    """Collapse x_m onto z_{j,i} for every m in I_{j,i}."""
    if f.nvars != lam.n:
        raise ValueError(f"polynomial has {f.nvars} variables, partition is of {lam.n}")
    target = []
    for j_block in lam.index_sets():
        for idx in j_block:
            target.append(idx)
    where = [0] * lam.n
    for zpos, idx in enumerate(target):
        for m in idx:
            where[m] = zpos
    ell = lam.length
    terms = {}
    for mon, c in f.terms.items():
        out = [0] * ell
        for m, e in enumerate(mon):
            if e:
                out[where[m]] += e
        key = tuple(out)
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(BlockVars.of(lam).z_flat, terms)


def matrix_Z(lam):
    """The ell x n block matrix with 1/n_i on the columns I_{j,i} of row (j, i)."""
    rows = []
    for (a, _), blk in zip(lam.blocks, lam.index_sets()):
        for idx in blk:
            row = [Fraction(0)] * lam.n
            for m in idx:
                row[m] = Fraction(1, a)
            rows.append(row)
    return rows


def _block_offsets(lam):
    offs = []
    o = 0
    for _, t in lam.blocks:
        offs.append(o)
        o += t
    return offs


def is_invariant(g, lam):
    """True iff g is fixed by every adjacent transposition inside each block."""
    if g.nvars != lam.length:
        raise ValueError("polynomial variables do not match the partition's blocks")
    for off, (_, t) in zip(_block_offsets(lam), lam.blocks):
        for j in range(t - 1):
            a, b = off + j, off + j + 1
            for mon, c in g.terms.items():
                if mon[a] == mon[b]:
                    continue
                sw = list(mon)
                sw[a], sw[b] = sw[b], sw[a]
                if g.terms.get(tuple(sw)) != c:
                    return False
    return True


# -- symmetric reduction ----------------------------------------------------

def _poly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _elementary(t, j):
    """E_j in t variables as {exponent: 1}."""
    from itertools import combinations

    out = {}
    for idx in combinations(range(t), j):
        m = [0] * t
        for i in idx:
            m[i] = 1
        out[tuple(m)] = Fraction(1)
    return out


@lru_cache(maxsize=4096)
def _elementary_power_sorted(t, gamma):
    """Sorted-monomial part of prod_j E_j^gamma_j in t variables."""
    full = _elementary_power_full(t, gamma)
    return tuple((m, c) for m, c in full.items() if all(m[i] >= m[i + 1] for i in range(t - 1)))


@lru_cache(maxsize=4096)
def _elementary_power_full(t, gamma):
    if not any(gamma):
        return {(0,) * t: Fraction(1)}
    j = max(i for i, g in enumerate(gamma) if g)
    prev = list(gamma)
    prev[j] -= 1
    return _poly_mul(_elementary_power_full(t, tuple(prev)), _elementary(t, j + 1))


def _symmetric_to_elementary(h, t):
    """Rewrite a symmetric polynomial {exp: c} in t variables as {e-exp: c}."""
    work = {m: c for m, c in h.items() if all(m[i] >= m[i + 1] for i in range(t - 1))}
    out = {}
    while work:
        lead = max(work)
        c = work[lead]
        gamma = tuple(lead[i] - (lead[i + 1] if i + 1 < t else 0) for i in range(t))
        out[gamma] = out.get(gamma, 0) + c
        for m, cc in _elementary_power_sorted(t, gamma):
            v = work.get(m, 0) - c * cc
            if v:
                work[m] = v
            else:
                work.pop(m, None)
        if lead in work:
            raise ArithmeticError("symmetric reduction did not cancel the leading term")
    return out


def to_elementary(g, lam):
    """The unique zeta_g over the e-variables with zeta_g(E_1, ..., E_k) = g."""
    if not is_invariant(g, lam):
        raise ValueError("polynomial is not invariant under the block permutation group")
    bv = BlockVars.of(lam)
    terms = dict(g.terms)
    for off, (_, t) in zip(_block_offsets(lam), lam.blocks):
        groups = {}
        for mon, c in terms.items():
            rest = mon[:off] + mon[off + t:]
            groups.setdefault(rest, {})[mon[off:off + t]] = c
        terms = {}
        for rest, h in groups.items():
            for gamma, c in _symmetric_to_elementary(h, t).items():
                key = rest[:off] + gamma + rest[off:]
                terms[key] = terms.get(key, 0) + c
        terms = {m: c for m, c in terms.items() if c}
    return MultiPoly(bv.e_flat, terms)


@lru_cache(maxsize=None)
def _newton_elementary_in_power(t):
    """e_1..e_t of t variables as polynomials in p_1..p_t (plain names p1..pt)."""
    names = tuple(f"p{j}" for j in range(1, t + 1))
    P = [MultiPoly.var(v, names) for v in names]
    e = [MultiPoly.const(1, names)]
    for k in range(1, t + 1):
        acc = MultiPoly.zero(names)
        for i in range(1, k + 1):
            term = e[k - i] * P[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc * Fraction(1, k))
    return e[1:]


def to_power_sums(g, lam):
    """The unique gamma_g over the p-variables with gamma_g(P_1, ..., P_k) = g."""
    zeta = to_elementary(g, lam)
    bv = BlockVars.of(lam)
    target = bv.p_flat
    images = []
    for pnames, (_, t) in zip(bv.p, lam.blocks):
        local = _newton_elementary_in_power(t)
        for ej in local:
            images.append(ej.embed(tuple(f"p{j}" for j in range(1, t + 1))).compose(
                [MultiPoly.var(v, target) for v in pnames], target))
    return zeta.compose(images, target)


@lru_cache(maxsize=None)
def _power_sums_in_e(t, jmax):
    names = tuple(f"e{m}" for m in range(1, t + 1))
    e = [MultiPoly.var(v, names) for v in names]
    P = []
    for j in range(1, jmax + 1):
        acc = MultiPoly.zero(names)
        for i in range(1, min(j - 1, t) + 1):
            term = e[i - 1] * P[j - i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        if j <= t:
            acc = acc + e[j - 1] * j if j % 2 == 1 else acc - e[j - 1] * j
        P.append(acc)
    return tuple(P)


def power_sum_in_elementary(j, t, names=None):
    """P_j(z_1..z_t) expressed in e_1..e_t (Newton's identities, e_m = 0 for m > t)."""
    if j < 1 or t < 1:
        raise ValueError("j and t must be positive")
    p = _power_sums_in_e(t, j)[j - 1]
    if names is not None:
        names = tuple(names)
        if len(names) != t:
            raise ValueError("need one name per elementary variable")
        p = MultiPoly(names, p.terms, _trusted=True)
    return p


def substitute_elementary(zeta, lam):
    """Expand zeta(E_1, ..., E_k) back into the z-variables."""
    bv = BlockVars.of(lam)
    zvars = bv.z_flat
    images = []
    off = 0
    for _, t in lam.blocks:
        for j in range(1, t + 1):
            terms = {}
            for m, c in _elementary(t, j).items():
                terms[(0,) * off + m + (0,) * (len(zvars) - off - t)] = c
            images.append(MultiPoly(zvars, terms, _trusted=True))
        off += t
    return zeta.compose(images, zvars)


def substitute_power_sums(gamma, lam):
    """Expand gamma(P_1, ..., P_k) back into the z-variables."""
    bv = BlockVars.of(lam)
    zvars = bv.z_flat
    images = []
    off = 0
    for _, t in lam.blocks:
        for j in range(1, t + 1):
            terms = {}
            for r in range(t):
                m = [0] * len(zvars)
                m[off + r] = j
                terms[tuple(m)] = Fraction(1)
            images.append(MultiPoly(zvars, terms, _trusted=True))
        off += t
    return gamma.compose(images, zvars)


def fiber_polynomials(R, lam):
    """rho_i = v' u^t_i - v_{1,i} u^(t_i - 1) + ... + (-1)^t_i v_{t_i,i} for each block."""
    if len(R.coords) != lam.length:
        raise ValueError(
            f"parametrization has {len(R.coords)} coordinates, partition has length {lam.length}")
    vp = R.v.diff()
    out = []
    off = 0
    for _, t in lam.blocks:
        coeffs = [UniPoly([], R.v.var)] * (t + 1)
        coeffs[t] = vp
        for j in range(1, t + 1):
            vj = R.coords[off + j - 1]
            coeffs[t - j] = vj if j % 2 == 0 else -vj
        out.append(BiPoly(coeffs, tvar=R.v.var, uvar="u"))
        off += t
    return out

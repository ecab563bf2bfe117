"""Polynomial matrices, Jacobians and minors."""

from itertools import combinations

from .multipoly import MultiPoly


class PolyMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("matrix rows have different lengths")
            vars = rows[0][0].vars if width else None
            if any(e.vars != vars for r in rows for e in r):
                raise ValueError("matrix entries must share one variable set")
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __repr__(self):
        return "PolyMatrix([" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "])"

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in r] for r in self.rows])

    def matmul_const(self, Z):
        """Right-multiply by a matrix of rationals (list of lists)."""
        nr, nc = self.shape
        if len(Z) != nc:
            raise ValueError("inner dimensions differ")
        out_cols = len(Z[0]) if Z else 0
        out = []
        for r in self.rows:
            row = []
            for j in range(out_cols):
                acc = MultiPoly.zero(r[0].vars)
                for k in range(nc):
                    if Z[k][j]:
                        acc = acc + r[k] * Z[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.rows[i][j] for j in cols] for i in rows])


def jacobian(polys, vars):
    """Matrix of partial derivatives d polys[i] / d vars[j]."""
    polys = list(polys)
    for p in polys:
        missing = [v for v in vars if v not in p.vars]
        if missing:
            raise ValueError(f"variables {missing} not among polynomial variables {p.vars}")
    return PolyMatrix([[p.diff(v) for v in vars] for p in polys])


def det(entries):
    """Determinant of a square list-of-lists of MultiPoly by memoized Laplace expansion."""
    k = len(entries)
    if k == 0:
        raise ValueError("empty matrix")
    if any(len(r) != k for r in entries):
        raise ValueError("matrix is not square")
    vars = entries[0][0].vars
    memo = {}

    # det of rows[row:] restricted to the column set `cols`
    def rec(row, cols):
        if row == k:
            return MultiPoly.const(1, vars)
        key = cols
        if key in memo:
            return memo[key]
        acc = MultiPoly.zero(vars)
        for pos, c in enumerate(cols):
            e = entries[row][c]
            if not e:
                continue
            sub = rec(row + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = e * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return rec(0, tuple(range(k)))


def minors_k(M, k):
    """All k x k minors of M.

    Order: row subsets in lexicographic order, and for each row subset the
    column subsets in lexicographic order.
    """
    nr, nc = M.shape
    if not 1 <= k <= min(nr, nc):
        raise ValueError(f"minor size {k} out of range for a {nr}x{nc} matrix")
    out = []
    for rows in combinations(range(nr), k):
        for cols in combinations(range(nc), k):
            out.append(det([[M.rows[i][j] for j in cols] for i in rows]))
    return out


def rational_rank(rows):
    """Rank of a matrix of Fractions by Gaussian elimination."""
    A = [list(r) for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for r in range(len(A)):
            if r != rank and A[r][c]:
                f = A[r][c] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[rank])]
        rank += 1
    return rank

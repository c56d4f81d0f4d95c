"""Exact linear algebra over the coefficient rings and polynomial rings.

Three determinant paths: fraction-free Bareiss elimination for integral
domains, minor expansion for small structured matrices, and Gaussian
elimination over fields.  Matrices stay small here (a few dozen rows), so the
contract is exactness, not asymptotics.
"""

from __future__ import annotations

from itertools import combinations


class RingMatrix:
    """Rectangular matrix with entries in one ring (scalar or MultiPoly)."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def is_square(self):
        return self.nrows == self.ncols

    def submatrix(self, row_idx, col_idx):
        return RingMatrix(self.ring, [[self.rows[i][j] for j in col_idx]
                                      for i in row_idx])


def _is_zero(ring, x):
    return ring.is_zero(x) if not hasattr(x, "is_zero") else x.is_zero()


def det_bareiss(m: RingMatrix, exact_div=None):
    """Fraction-free determinant; needs exact division in the entry ring."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.ring.one
    ring = m.ring
    if exact_div is None:
        exact_div = (lambda a, b: a.exact_div(b)) if hasattr(
            m.rows[0][0], "exact_div") else ring.exact_div
    a = [row[:] for row in m.rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(ring, a[k][k]):
            pivot = next((i for i in range(k + 1, n)
                          if not _is_zero(ring, a[i][k])), None)
            if pivot is None:
                return zero_like(a[0][0], ring)
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else exact_div(num, prev)
            a[i][k] = None
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def zero_like(sample, ring):
    return sample - sample if hasattr(sample, "__sub__") and not isinstance(
        sample, (int,)) else ring.zero


def det_laplace(m: RingMatrix):
    """Minor expansion along the first column, memoized on row subsets."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    ring = m.ring
    if n == 0:
        return ring.one
    rows = m.rows
    cache = {}

    def minor(row_mask, col):
        if col == n:
            return None  # unreachable: masks empty out first
        key = row_mask
        if key in cache:
            return cache[key]
        live = [i for i in range(n) if row_mask >> i & 1]
        if len(live) == 1:
            out = rows[live[0]][col]
        else:
            out = None
            sign = 1
            for pos, i in enumerate(live):
                e = rows[i][col]
                if not _is_zero(ring, e):
                    sub = minor(row_mask & ~(1 << i), col + 1)
                    term = e * sub
                    if sign < 0:
                        term = -term
                    out = term if out is None else out + term
                sign = -sign
            if out is None:
                out = zero_like(rows[0][0], ring)
        cache[key] = out
        return out

    return minor((1 << n) - 1, 0)


def det_field(m: RingMatrix):
    """Gaussian elimination over a field (Fraction or Cyclotomic3 entries)."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    ring = m.ring
    n = m.nrows
    if n == 0:
        return ring.one
    a = [row[:] for row in m.rows]
    det = ring.one
    for k in range(n):
        pivot = next((i for i in range(k, n) if not ring.is_zero(a[i][k])), None)
        if pivot is None:
            return ring.zero
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det = det * a[k][k]
        inv = ring.invert(a[k][k])
        for i in range(k + 1, n):
            if ring.is_zero(a[i][k]):
                continue
            f = a[i][k] * inv
            for j in range(k, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return det


def kernel_basis(m: RingMatrix):
    """Right-kernel basis over a field.

    Deterministic echelon pivoting: scan columns left to right, pivot on the
    first row with a nonzero entry.  Basis vectors are indexed by the free
    columns, each with a 1 in its free slot.
    """
    ring = m.ring
    rows = [row[:] for row in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []  # (row, col)
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if not ring.is_zero(rows[i][c])),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ring.invert(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and not ring.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == nr:
            break
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(nc) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [ring.zero] * nc
        v[fc] = ring.one
        for pr, pc in pivots:
            v[pc] = -rows[pr][fc]
        basis.append(v)
    return basis


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    if a.ncols != b.nrows:
        raise ValueError("dimension mismatch")
    ring = a.ring
    bt = list(zip(*b.rows))
    out = []
    for row in a.rows:
        orow = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if _is_zero(ring, x) or _is_zero(ring, y):
                    continue
                t = x * y
                acc = t if acc is None else acc + t
            orow.append(ring.zero if acc is None else acc)
        out.append(orow)
    return RingMatrix(ring, out)


def mat_sub(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    return RingMatrix(a.ring, [[x - y for x, y in zip(ra, rb)]
                               for ra, rb in zip(a.rows, b.rows)])


def mat_identity(ring, n) -> RingMatrix:
    return RingMatrix(ring, [[ring.one if i == j else ring.zero
                              for j in range(n)] for i in range(n)])


def mat_is_zero(a: RingMatrix) -> bool:
    return all(_is_zero(a.ring, x) for row in a.rows for x in row)


def mat_apply(a: RingMatrix, v):
    ring = a.ring
    out = []
    for row in a.rows:
        acc = ring.zero
        for x, y in zip(row, v):
            if not (_is_zero(ring, x) or _is_zero(ring, y)):
                acc = acc + x * y
        out.append(acc)
    return out


def laplace_block_det(m: RingMatrix, split: int, minor_det=det_laplace):
    """Laplace expansion of det(m) along the first ``split`` columns.

    Returns the sum over row subsets R of size ``split`` of
    sign(R) * det(m[R, :split]) * det(m[~R, split:]).  Row subsets whose
    first minor is structurally zero should be skipped by the caller's
    minor_det returning an exact zero; we skip full-zero rows cheaply here.
    """
    n = m.nrows
    ring = m.ring
    base = sum(range(1, split + 1))
    total = None
    for rows1 in combinations(range(n), split):
        m1 = m.submatrix(rows1, range(split))
        if any(all(_is_zero(ring, m1.rows[i][j]) for j in range(split))
               for i in range(split)):
            continue
        rows2 = [i for i in range(n) if i not in rows1]
        sign = (-1) ** (sum(r + 1 for r in rows1) + base)
        d1 = minor_det(m1)
        if _is_zero(ring, d1):
            continue
        d2 = minor_det(m.submatrix(rows2, range(split, m.ncols)))
        term = d1 * d2
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return zero_like(m.rows[0][0], ring)
    return total

"""Exact linear algebra over Q(omega).

Dense row-oriented Gaussian elimination with fraction-free-in-spirit pivot
selection (sparsest available row first, then lowest index) to keep
coefficient growth in check.  Everything returns exact CycScalar data; there
is no floating point anywhere in this package.
"""

from __future__ import annotations

from gerstenhaber.scalars import CycScalar


class ExactMatrix:
    """A rows x cols matrix over Q(omega_p), stored sparsely by row."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p: int, nrows: int, ncols: int, entries: dict | None = None):
        self.p = p
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[dict[int, CycScalar]] = [dict() for _ in range(nrows)]
        if entries:
            for (r, c), v in entries.items():
                if not isinstance(v, CycScalar):
                    v = CycScalar.from_rational(p, v)
                if not v.is_zero():
                    self.rows[r][c] = v

    @staticmethod
    def from_columns(p: int, nrows: int, columns: list[dict[int, CycScalar]]) -> "ExactMatrix":
        m = ExactMatrix(p, nrows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                if not v.is_zero():
                    m.rows[r][c] = v
        return m

    def entry(self, r: int, c: int) -> CycScalar:
        return self.rows[r].get(c, CycScalar.zero(self.p))

    def copy(self) -> "ExactMatrix":
        m = ExactMatrix(self.p, self.nrows, self.ncols)
        m.rows = [dict(r) for r in self.rows]
        return m


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int], list[list[CycScalar]]]:
    """Reduced row echelon form.

    Returns (R, pivot columns, T) with T the accumulated row transform:
    T @ original = R, T given as dense rows.
    """
    p = m.p
    work = m.copy()
    one = CycScalar.one(p)
    zero = CycScalar.zero(p)
    # transform starts as the identity
    t_rows: list[dict[int, CycScalar]] = [{i: one} for i in range(m.nrows)]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.ncols):
        # choose the sparsest row with a nonzero entry in this column
        best = None
        for r in range(pivot_row, m.nrows):
            if col in work.rows[r]:
                key = (len(work.rows[r]), r)
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            continue
        r = best[1]
        work.rows[pivot_row], work.rows[r] = work.rows[r], work.rows[pivot_row]
        t_rows[pivot_row], t_rows[r] = t_rows[r], t_rows[pivot_row]
        inv = work.rows[pivot_row][col].inverse()
        work.rows[pivot_row] = {c: inv * v for c, v in work.rows[pivot_row].items()}
        t_rows[pivot_row] = {c: inv * v for c, v in t_rows[pivot_row].items()}
        for rr in range(m.nrows):
            if rr == pivot_row:
                continue
            factor = work.rows[rr].get(col)
            if factor is None:
                continue
            _row_axpy(work.rows[rr], work.rows[pivot_row], factor)
            _row_axpy(t_rows[rr], t_rows[pivot_row], factor)
        pivots.append(col)
        pivot_row += 1
        if pivot_row == m.nrows:
            break
    transform = [
        [t_rows[r].get(c, zero) for c in range(m.nrows)] for r in range(m.nrows)
    ]
    return work, pivots, transform


def _row_axpy(target: dict[int, CycScalar], source: dict[int, CycScalar], factor: CycScalar):
    """target -= factor * source, in place, dropping zeros."""
    for c, v in source.items():
        cur = target.get(c)
        nv = (cur - factor * v) if cur is not None else -(factor * v)
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


def rank(m: ExactMatrix) -> int:
    _, pivots, _ = rref(m)
    return len(pivots)


def kernel_basis(m: ExactMatrix) -> list[list[CycScalar]]:
    """Exact basis of the right null space."""
    p = m.p
    r, pivots, _ = rref(m)
    zero = CycScalar.zero(p)
    one = CycScalar.one(p)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [zero] * m.ncols
        vec[fc] = one
        for prow, pcol in enumerate(pivots):
            coeff = r.rows[prow].get(fc)
            if coeff is not None:
                vec[pcol] = -coeff
        basis.append(vec)
    return basis


def solve_membership(m: ExactMatrix, v: list[CycScalar]) -> list[CycScalar] | None:
    """Some exact solution x of M x = v, or None if v is outside the column span."""
    p = m.p
    if len(v) != m.nrows:
        raise ValueError("vector length must match the row count")
    aug = m.copy()
    aug.ncols = m.ncols + 1
    for r, val in enumerate(v):
        if not isinstance(val, CycScalar):
            val = CycScalar.from_rational(p, val)
        if not val.is_zero():
            aug.rows[r][m.ncols] = val
    r, pivots, _ = rref(aug)
    if m.ncols in pivots:
        return None
    zero = CycScalar.zero(p)
    x = [zero] * m.ncols
    for prow, pcol in enumerate(pivots):
        x[pcol] = r.rows[prow].get(m.ncols, zero)
    return x

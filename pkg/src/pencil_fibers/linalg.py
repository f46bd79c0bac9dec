"""Dense exact linear algebra over a NumberField."""

from dataclasses import dataclass


@dataclass(frozen=True)
class KMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major FieldElements

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix without rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def row_list(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, vec):
        out = []
        for r in self.row_list():
            acc = None
            for a, b in zip(r, vec):
                term = a * b
                acc = term if acc is None else acc + term
            out.append(acc)
        return out


def rref(rows, ncols):
    """Reduced row echelon form. Returns (reduced nonzero rows, pivot columns).

    Pivot choice is deterministic: columns left to right, first remaining row
    with a nonzero entry. The reduced form is unique, so the output does not
    depend on the order of the input rows.
    """
    m = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        prow = [x * inv for x in m[r]]
        m[r] = prow
        for i in range(len(m)):
            if i != r:
                f = m[i][col]
                if not f.is_zero():
                    m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], prow)]
        pivots.append(col)
        r += 1
    return m[:r], pivots


def rank_and_kernel(matrix, field=None):
    """Rank and a basis of the right kernel {v : M v = 0}.

    ``matrix`` is a KMatrix or a list of rows. ``field`` is only needed when
    the matrix has no entries.
    """
    if isinstance(matrix, KMatrix):
        rows, ncols = matrix.row_list(), matrix.cols
        if field is None and matrix.entries:
            field = matrix.entries[0].field
    else:
        rows = [list(r) for r in matrix]
        ncols = len(rows[0]) if rows else 0
    if field is None:
        raise ValueError("field is required for an empty matrix")
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return len(pivots), basis


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])


def determinant(rows, field):
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        piv = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for i in range(col + 1, n):
            f = m[i][col]
            if not f.is_zero():
                f = f * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det

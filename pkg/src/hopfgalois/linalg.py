"""Dense exact linear algebra over Q and F_p.

Matrices are flat row-major lists of scalars tagged with a field object
(see fields).  Everything is immutable by convention: operations return new
matrices and never mutate their inputs, so values are safe to share.

Over F_p the two hot kernels (rref, matmul) dispatch to the compiled
extension _modp_fast when it is importable, else to the pure-Python twin
_modp_py; both implement the same deterministic pivot policy (leftmost
nonzero pivot, rows scanned top-down).  Over Q the Fraction path below is
always used.
"""

from . import _modp_py

try:  # compiled kernels are optional
    from . import _modp_fast as _modp

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build env
    _modp = _modp_py
    BACKEND = "pure"


class NoSolution(Exception):
    """The linear system has no solution."""


class NotInvertible(Exception):
    """The (square) matrix is singular."""


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        if len(data) != rows * cols:
            raise ValueError(f"data length {len(data)} != {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = list(data)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        data = [field.zero] * (n * n)
        for i in range(n):
            data[i * n + i] = field.one
        return cls(field, n, n, data)

    @classmethod
    def from_rows(cls, field, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            data.extend(r)
        return cls(field, nrows, ncols, data)

    @classmethod
    def from_cols(cls, field, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("need nrows for an empty column list")
            return cls.zeros(field, nrows, 0)
        nrows = len(cols[0])
        ncols = len(cols)
        data = [field.zero] * (nrows * ncols)
        for j, c in enumerate(cols):
            if len(c) != nrows:
                raise ValueError("ragged columns")
            for i in range(nrows):
                data[i * ncols + j] = c[i]
        return cls(field, nrows, ncols, data)

    # -- access ------------------------------------------------------------

    def get(self, i, j):
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    # -- equality / predicates ---------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(self.data)))

    def is_zero(self):
        z = self.field.zero
        return all(x == z for x in self.data)

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_shape(other)
        add = self.field.add
        return Matrix(self.field, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check_shape(other)
        sub = self.field.sub
        return Matrix(self.field, self.rows, self.cols,
                      [sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self.data])

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [mul(c, a) for a in self.data])

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        if f.kind == "Fp":
            data = _modp.matmul_modp(self.data, self.rows, self.cols,
                                     other.data, other.rows, other.cols, f.p)
            return Matrix(f, self.rows, other.cols, data)
        ar, ac, bc = self.rows, self.cols, other.cols
        a, b = self.data, other.data
        zero = f.zero
        out = [zero] * (ar * bc)
        for i in range(ar):
            base = i * bc
            for k in range(ac):
                aik = a[i * ac + k]
                if aik != zero:
                    boff = k * bc
                    for j in range(bc):
                        out[base + j] = out[base + j] + aik * b[boff + j]
        return Matrix(f, ar, bc, out)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        zero = f.zero
        out = [zero] * self.rows
        data, cols = self.data, self.cols
        for j, v in enumerate(vec):
            if v != zero:
                for i in range(self.rows):
                    out[i] = f.add(out[i], f.mul(data[i * cols + j], v))
        return out

    def transpose(self):
        out = [self.field.zero] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.data[i * self.cols + j]
        return Matrix(self.field, self.cols, self.rows, out)

    def kron(self, other):
        """Kronecker/tensor product, left factor index major."""
        f = self.field
        ar, ac, br, bc = self.rows, self.cols, other.rows, other.cols
        out = [f.zero] * (ar * br * ac * bc)
        mul = f.mul
        for i in range(ar):
            for j in range(ac):
                a = self.data[i * ac + j]
                if a == f.zero:
                    continue
                for k in range(br):
                    orow = (i * br + k) * (ac * bc)
                    boff = k * bc
                    for l in range(bc):
                        out[orow + j * bc + l] = mul(a, other.data[boff + l])
        return Matrix(f, ar * br, ac * bc, out)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form.  Returns (Matrix, pivot column list)."""
        f = self.field
        if f.kind == "Fp":
            data, pivots = _modp.rref_modp(self.data, self.rows, self.cols, f.p)
            return Matrix(f, self.rows, self.cols, data), pivots
        m = self.row_list()
        pivots = []
        row = 0
        for col in range(self.cols):
            if row == self.rows:
                break
            sel = -1
            for r in range(row, self.rows):
                if m[r][col] != f.zero:
                    sel = r
                    break
            if sel < 0:
                continue
            m[row], m[sel] = m[sel], m[row]
            inv = f.inv(m[row][col])
            m[row] = [f.mul(inv, v) for v in m[row]]
            for r in range(self.rows):
                if r != row and m[r][col] != f.zero:
                    c = m[r][col]
                    m[r] = [f.sub(a, f.mul(c, b)) for a, b in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
        return Matrix.from_rows(f, m) if m else Matrix.zeros(f, 0, self.cols), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Deterministic basis of the right nullspace, as a list of vectors.

        One basis vector per free column, in increasing column order, with a
        1 in the free position.
        """
        f = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for fc in free:
            v = [f.zero] * self.cols
            v[fc] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(red.get(r, fc))
            basis.append(v)
        return basis

    def solve(self, b):
        """A particular solution x of self @ x = b.  Raises NoSolution."""
        if len(b) != self.rows:
            raise ValueError("rhs length mismatch")
        f = self.field
        aug = Matrix(f, self.rows, self.cols + 1,
                     [x for i in range(self.rows) for x in self.row(i) + [b[i]]])
        red, pivots = aug.rref()
        if self.cols in pivots:
            raise NoSolution()
        x = [f.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.get(r, self.cols)
        return x

    def solve_with_kernel(self, b):
        """Particular solution plus a kernel basis (the full solution set)."""
        return self.solve(b), self.kernel()

    def solve_matrix(self, rhs):
        """Solve self @ X = rhs column by column (X need not be unique)."""
        cols = [self.solve(rhs.col(j)) for j in range(rhs.cols)]
        return Matrix.from_cols(self.field, cols, nrows=self.cols)

    def invert(self):
        if self.rows != self.cols:
            raise NotInvertible("not square")
        n = self.rows
        f = self.field
        aug = Matrix(f, n, 2 * n,
                     [x for i in range(n) for x in self.row(i) + Matrix.identity(f, n).row(i)])
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise NotInvertible()
        data = [red.get(i, n + j) for i in range(n) for j in range(n)]
        return Matrix(f, n, n, data)

    def is_invertible(self):
        try:
            self.invert()
            return True
        except NotInvertible:
            return False

    def left_inverse(self):
        """L with L @ self = I; requires full column rank."""
        f = self.field
        n = self.rows
        aug = Matrix(f, n, self.cols + n,
                     [x for i in range(n) for x in self.row(i) + Matrix.identity(f, n).row(i)])
        red, pivots = aug.rref()
        if [p for p in pivots if p < self.cols] != list(range(self.cols)):
            raise NotInvertible("not full column rank")
        data = [red.get(i, self.cols + j) for i in range(self.cols) for j in range(n)]
        return Matrix(f, self.cols, n, data)


# -- stacking and tensor-leg utilities ------------------------------------


def hstack(mats):
    rows = mats[0].rows
    data = []
    for i in range(rows):
        for m in mats:
            data.extend(m.row(i))
    return Matrix(mats[0].field, rows, sum(m.cols for m in mats), data)


def vstack(mats):
    cols = mats[0].cols
    data = []
    for m in mats:
        if m.cols != cols:
            raise ValueError("column mismatch")
        data.extend(m.data)
    return Matrix(mats[0].field, sum(m.rows for m in mats), cols, data)


def basis_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def kron_vec(field, v, w):
    out = [field.zero] * (len(v) * len(w))
    mul = field.mul
    for i, a in enumerate(v):
        if a != field.zero:
            base = i * len(w)
            for j, b in enumerate(w):
                out[base + j] = mul(a, b)
    return out


def vec_add(field, v, w):
    return [field.add(a, b) for a, b in zip(v, w)]

def vec_sub(field, v, w):
    return [field.sub(a, b) for a, b in zip(v, w)]

def vec_scale(field, c, v):
    return [field.mul(c, a) for a in v]

def vec_is_zero(field, v):
    return all(a == field.zero for a in v)


def perm_legs(field, dims, perm):
    """Permutation matrix reordering tensor legs.

    Source basis index is the lexicographic flattening of (i_0, ..., i_{k-1})
    with leg 0 major; output leg j carries source leg perm[j].
    """
    k = len(dims)
    out_dims = [dims[perm[j]] for j in range(k)]
    size = 1
    for d in dims:
        size *= d
    mat = Matrix.zeros(field, size, size)
    idx = [0] * k
    for flat in range(size):
        # decode source multi-index
        rem = flat
        for leg in reversed(range(k)):
            idx[leg] = rem % dims[leg]
            rem //= dims[leg]
        tflat = 0
        for j in range(k):
            tflat = tflat * out_dims[j] + idx[perm[j]]
        mat.data[tflat * size + flat] = field.one
    return mat


def swap_matrix(field, m, n):
    """The flip X (x) Y -> Y (x) X on an m-dim and an n-dim factor."""
    return perm_legs(field, (m, n), (1, 0))


def tensor_entries(field, vec, dims):
    """Iterate (multi_index, coeff) over the nonzero entries of a tensor.

    dims are the leg dimensions, leg 0 major (the package-wide convention).
    """
    k = len(dims)
    for flat, c in enumerate(vec):
        if c != field.zero:
            idx = [0] * k
            rem = flat
            for leg in reversed(range(k)):
                idx[leg] = rem % dims[leg]
                rem //= dims[leg]
            yield tuple(idx), c

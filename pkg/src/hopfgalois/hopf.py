"""Finite-dimensional algebras, coalgebras and Hopf algebras by structure
constants, with exact axiom validation and a few built-in generators.

Conventions (inherited by every other module):
  * the multiplication is a matrix  m : A (x) A -> A,
  * the comultiplication a matrix  Delta : H -> H (x) H,
  * tensor factors are flattened lexicographically with the LEFT leg major.
"""

from .linalg import (Matrix, NotInvertible, basis_vec, kron_vec, swap_matrix,
                     tensor_entries, vec_is_zero)


class DimensionMismatch(ValueError):
    pass


class NotAGroup(ValueError):
    pass


class BadCharacteristic(ValueError):
    pass


class ValidationReport:
    """Outcome of an axiom audit: empty failure list means pass.

    Each failure is (axiom name, witness); the witness is a tuple of basis
    indices locating the first offending instance, or None when the failure
    is structural (e.g. a dimension clash).
    """

    def __init__(self):
        self.failures = []

    def fail(self, axiom, witness=None):
        self.failures.append((axiom, witness))

    @property
    def passed(self):
        return not self.failures

    def check(self, axiom, lhs, rhs, witness_dims=None):
        """Record the first differing entry of two matrices under `axiom`."""
        diff = lhs - rhs
        if not diff.is_zero():
            witness = None
            if witness_dims is not None:
                for i, x in enumerate(diff.data):
                    if x != diff.field.zero:
                        col = i % diff.cols
                        witness = _unflatten(col, witness_dims)
                        break
            self.fail(axiom, witness)

    def __repr__(self):
        status = "pass" if self.passed else f"fail({self.failures!r})"
        return f"ValidationReport({status})"


def _unflatten(flat, dims):
    idx = [0] * len(dims)
    for leg in reversed(range(len(dims))):
        idx[leg] = flat % dims[leg]
        flat //= dims[leg]
    return tuple(idx)


class StructureConstantAlgebra:
    """Associative unital algebra given by a multiplication tensor.

    mul is the matrix A (x) A -> A; unit is the coordinate vector of 1.
    """

    def __init__(self, field, dim, mul, unit, labels=None):
        if mul.rows != dim or mul.cols != dim * dim or len(unit) != dim:
            raise DimensionMismatch("algebra tensor shapes")
        self.field = field
        self.dim = dim
        self.mul = mul
        self.unit = list(unit)
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]

    def product(self, v, w):
        return self.mul.apply(kron_vec(self.field, v, w))

    def lmul(self, v):
        """Matrix of left multiplication by the element v."""
        cols = [self.product(v, basis_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def rmul(self, v):
        cols = [self.product(basis_vec(self.field, self.dim, j), v)
                for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, nrows=self.dim)

    def element_inverse(self, v):
        """Two-sided inverse of v, or None."""
        try:
            w = self.lmul(v).solve(self.unit)
        except Exception:
            return None
        if self.product(w, v) != self.unit:
            return None
        return w

    def is_commutative(self):
        sw = swap_matrix(self.field, self.dim, self.dim)
        return (self.mul @ sw) == self.mul

    def validate(self, report=None):
        report = report if report is not None else ValidationReport()
        f, n = self.field, self.dim
        idn = Matrix.identity(f, n)
        lhs = self.mul @ self.mul.kron(idn)          # (ab)c
        rhs = self.mul @ idn.kron(self.mul)          # a(bc)
        report.check("algebra.associativity", lhs, rhs, (n, n, n))
        for i in range(n):
            e = basis_vec(f, n, i)
            if self.product(self.unit, e) != e:
                report.fail("algebra.left-unit", (i,))
                break
        for i in range(n):
            e = basis_vec(f, n, i)
            if self.product(e, self.unit) != e:
                report.fail("algebra.right-unit", (i,))
                break
        return report


class CoalgebraData:
    """Coalgebra: comul H -> H (x) H plus counit H -> k (a 1 x dim matrix)."""

    def __init__(self, field, dim, comul, counit):
        if comul.rows != dim * dim or comul.cols != dim or counit.cols != dim:
            raise DimensionMismatch("coalgebra tensor shapes")
        self.field = field
        self.dim = dim
        self.comul = comul
        self.counit = counit

    def counit_of(self, v):
        return self.counit.apply(v)[0]

    def validate(self, report=None):
        report = report if report is not None else ValidationReport()
        f, n = self.field, self.dim
        idn = Matrix.identity(f, n)
        lhs = self.comul.kron(idn) @ self.comul
        rhs = idn.kron(self.comul) @ self.comul
        report.check("coalgebra.coassociativity", lhs, rhs, (n,))
        left = self.counit.kron(idn) @ self.comul    # (eps (x) id) Delta
        right = idn.kron(self.counit) @ self.comul
        report.check("coalgebra.left-counit", left, idn, (n,))
        report.check("coalgebra.right-counit", right, idn, (n,))
        return report


class HopfAlgebraData:
    """Hopf algebra: algebra + coalgebra on one space, antipode and its inverse."""

    def __init__(self, algebra, coalgebra, antipode, antipode_inv):
        if algebra.dim != coalgebra.dim or algebra.field != coalgebra.field:
            raise DimensionMismatch("algebra/coalgebra mismatch")
        if antipode.rows != algebra.dim or antipode_inv.rows != algebra.dim:
            raise DimensionMismatch("antipode shape")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode
        self.antipode_inv = antipode_inv

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels


def validate_hopf(h):
    """Audit all bialgebra + antipode axioms; exact, with witnesses."""
    f, n = h.field, h.dim
    report = ValidationReport()
    h.algebra.validate(report)
    h.coalgebra.validate(report)
    idn = Matrix.identity(f, n)
    mul, comul = h.algebra.mul, h.coalgebra.comul
    counit, unit = h.coalgebra.counit, h.algebra.unit
    sw = swap_matrix(f, n, n)

    # Delta is an algebra map: Delta(ab) = Delta(a)Delta(b)
    mul2 = mul.kron(mul) @ idn.kron(sw).kron(idn)    # product on H (x) H
    report.check("bialgebra.comul-multiplicative",
                 comul @ mul, mul2 @ comul.kron(comul), (n, n))
    if comul.apply(unit) != kron_vec(f, unit, unit):
        report.fail("bialgebra.comul-unit")
    # eps is an algebra map
    report.check("bialgebra.counit-multiplicative",
                 counit @ mul, counit.kron(counit), (n, n))
    if counit.apply(unit) != [f.one]:
        report.fail("bialgebra.counit-unit")

    unit_mat = Matrix.from_cols(f, [unit])           # k -> H
    eta_eps = unit_mat @ counit
    report.check("antipode.left", mul @ h.antipode.kron(idn) @ comul, eta_eps, (n,))
    report.check("antipode.right", mul @ idn.kron(h.antipode) @ comul, eta_eps, (n,))
    report.check("antipode.inverse-left", h.antipode @ h.antipode_inv, idn, (n,))
    report.check("antipode.inverse-right", h.antipode_inv @ h.antipode, idn, (n,))
    return report


def comul_iterated(h, x, arity):
    """x_(1) (x) ... (x) x_(r), computed by left-nested comultiplication."""
    if arity < 1:
        raise ValueError("arity must be >= 1")
    f, n = h.field, h.dim
    out = list(x)
    for step in range(arity - 1):
        trailing = n ** step
        op = h.coalgebra.comul.kron(Matrix.identity(f, trailing)) if step else h.coalgebra.comul
        out = op.apply(out)
    return out


def is_cocommutative(h):
    sw = swap_matrix(h.field, h.dim, h.dim)
    return (sw @ h.coalgebra.comul) == h.coalgebra.comul


# -- generators ------------------------------------------------------------


def _check_group_table(cayley):
    n = len(cayley)
    for row in cayley:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise NotAGroup("table entries out of range")
    identity = None
    for e in range(n):
        if all(cayley[e][j] == j and cayley[j][e] == j for j in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")
    inverse = [None] * n
    for i in range(n):
        for j in range(n):
            if cayley[i][j] == identity and cayley[j][i] == identity:
                inverse[i] = j
                break
        if inverse[i] is None:
            raise NotAGroup(f"element {i} has no inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]]:
                    raise NotAGroup(f"associativity fails at {(i, j, k)}")
    return identity, inverse


def group_algebra(field, cayley, labels=None):
    """The group algebra kG of a finite group given by its Cayley table."""
    identity, inverse = _check_group_table(cayley)
    n = len(cayley)
    mul = Matrix.zeros(field, n, n * n)
    for i in range(n):
        for j in range(n):
            mul.data[cayley[i][j] * n * n + i * n + j] = field.one
    unit = basis_vec(field, n, identity)
    comul = Matrix.zeros(field, n * n, n)
    for i in range(n):
        comul.data[(i * n + i) * n + i] = field.one
    counit = Matrix(field, 1, n, [field.one] * n)
    antipode = Matrix.zeros(field, n, n)
    for i in range(n):
        antipode.data[inverse[i] * n + i] = field.one
    alg = StructureConstantAlgebra(field, n, mul, unit, labels)
    coalg = CoalgebraData(field, n, comul, counit)
    return HopfAlgebraData(alg, coalg, antipode, antipode.invert())


def dual_group_algebra(field, cayley, labels=None):
    """The dual (kG)^*: idempotent basis, comultiplication from the table."""
    identity, inverse = _check_group_table(cayley)
    n = len(cayley)
    mul = Matrix.zeros(field, n, n * n)
    for i in range(n):
        mul.data[i * n * n + i * n + i] = field.one
    unit = [field.one] * n
    comul = Matrix.zeros(field, n * n, n)
    for a in range(n):
        for b in range(n):
            comul.data[(a * n + b) * n + cayley[a][b]] = field.one
    counit = Matrix.zeros(field, 1, n)
    counit.data[identity] = field.one
    antipode = Matrix.zeros(field, n, n)
    for i in range(n):
        antipode.data[inverse[i] * n + i] = field.one
    alg = StructureConstantAlgebra(field, n, mul, unit, labels)
    coalg = CoalgebraData(field, n, comul, counit)
    return HopfAlgebraData(alg, coalg, antipode, antipode.invert())


def cyclic_cayley(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def sweedler_h4(field):
    """The 4-dimensional Taft/Sweedler Hopf algebra, char(k) != 2.

    Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
    """
    if field.kind == "Fp" and field.p == 2:
        raise BadCharacteristic("needs char != 2")
    one, zero = field.one, field.zero
    n = 4
    labels = ["1", "g", "x", "gx"]
    # exponent form: index <-> (a, b) with element g^a x^b
    to_idx = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}
    from_idx = {v: k for k, v in to_idx.items()}
    mul = Matrix.zeros(field, n, n * n)
    for i in range(n):
        ai, bi = from_idx[i]
        for j in range(n):
            aj, bj = from_idx[j]
            if bi + bj >= 2:
                continue  # x^2 = 0
            sign = one if (bi * aj) % 2 == 0 else field.neg(one)
            k = to_idx[((ai + aj) % 2, bi + bj)]
            mul.data[k * n * n + i * n + j] = sign
    unit = basis_vec(field, n, 0)
    comul = Matrix.zeros(field, n * n, n)

    def set_comul(i, pairs):
        for (a, b), c in pairs:
            comul.data[(a * n + b) * n + i] = c

    set_comul(0, [((0, 0), one)])
    set_comul(1, [((1, 1), one)])
    set_comul(2, [((2, 0), one), ((1, 2), one)])          # x (x) 1 + g (x) x
    set_comul(3, [((3, 1), one), ((0, 3), one)])          # gx (x) g + 1 (x) gx
    counit = Matrix(field, 1, n, [one, one, zero, zero])
    antipode = Matrix.zeros(field, n, n)
    antipode.data[0 * n + 0] = one
    antipode.data[1 * n + 1] = one
    antipode.data[3 * n + 2] = field.neg(one)             # S(x) = -gx
    antipode.data[2 * n + 3] = one                        # S(gx) = x
    alg = StructureConstantAlgebra(field, n, mul, unit, labels)
    coalg = CoalgebraData(field, n, comul, counit)
    return HopfAlgebraData(alg, coalg, antipode, antipode.invert())

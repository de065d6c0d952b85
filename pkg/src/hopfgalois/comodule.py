"""Comodule algebras, coinvariants, relative Hopf modules and the quotient
construction M (x)_B A, together with the adjunction unit/counit.

Every identity "in M (x)_B A" is checked in quotient coordinates: the
QuotientSpace fixes a deterministic projection/section pair, and equality of
classes is equality of projected coordinates, never of representatives.
"""

from .hopf import DimensionMismatch, StructureConstantAlgebra, ValidationReport
from .linalg import (Matrix, NoSolution, basis_vec, kron_vec, vec_is_zero)


class InternalInvariant(RuntimeError):
    """A structural consequence that must hold for validated input failed."""


class IllDefinedStructure(RuntimeError):
    """An induced map does not vanish on the defining relations."""


class ComoduleAlgebraData:
    """Right H-comodule algebra: algebra A plus coaction rho: A -> A (x) H."""

    def __init__(self, hopf, algebra, coaction):
        if algebra.field != hopf.field:
            raise DimensionMismatch("field mismatch")
        if coaction.rows != algebra.dim * hopf.dim or coaction.cols != algebra.dim:
            raise DimensionMismatch("coaction shape")
        self.hopf = hopf
        self.algebra = algebra
        self.coaction = coaction
        self._coinv = None

    @property
    def field(self):
        return self.algebra.field

    def validate(self):
        f = self.field
        da, dh = self.algebra.dim, self.hopf.dim
        report = ValidationReport()
        self.algebra.validate(report)
        ida = Matrix.identity(f, da)
        idh = Matrix.identity(f, dh)
        rho = self.coaction
        lhs = rho.kron(idh) @ rho
        rhs = ida.kron(self.hopf.coalgebra.comul) @ rho
        report.check("comodule.coassociativity", lhs, rhs, (da,))
        report.check("comodule.counit", ida.kron(self.hopf.coalgebra.counit) @ rho,
                     ida, (da,))
        # rho is an algebra map
        for i in range(da):
            for j in range(da):
                prod = self.algebra.product(basis_vec(f, da, i), basis_vec(f, da, j))
                lhs_v = rho.apply(prod)
                rhs_v = _tensor_product(self, rho.apply(basis_vec(f, da, i)),
                                        rho.apply(basis_vec(f, da, j)))
                if lhs_v != rhs_v:
                    report.fail("comodule.multiplicative", (i, j))
                    break
            else:
                continue
            break
        if rho.apply(self.algebra.unit) != kron_vec(f, self.algebra.unit,
                                                    self.hopf.algebra.unit):
            report.fail("comodule.unit")
        return report

    def coinvariants(self):
        if self._coinv is None:
            self._coinv = _coinvariant_subalgebra(self)
        return self._coinv


def _tensor_product(ca, x, y):
    """Componentwise product on A (x) H of two coordinate vectors."""
    f = ca.field
    da, dh = ca.algebra.dim, ca.hopf.dim
    from .linalg import swap_matrix
    mul2 = ca.algebra.mul.kron(ca.hopf.algebra.mul) @ \
        Matrix.identity(f, da).kron(swap_matrix(f, dh, da)).kron(Matrix.identity(f, dh))
    return mul2.apply(kron_vec(f, x, y))


def comodule_coinvariant_basis(field, dim, coaction, hopf_unit):
    """Kernel of (rho - ((-) (x) 1)) as a dim x c matrix of column vectors."""
    dh = len(hopf_unit)
    embed = Matrix.from_cols(
        field, [kron_vec(field, basis_vec(field, dim, j), hopf_unit) for j in range(dim)],
        nrows=dim * dh)
    kernel = (coaction - embed).kernel()
    return Matrix.from_cols(field, kernel, nrows=dim)


class SubalgebraEmbedding:
    """B -> A: inclusion matrix plus the induced algebra structure on B."""

    def __init__(self, ambient, inclusion, algebra):
        self.ambient = ambient
        self.inclusion = inclusion
        self.algebra = algebra

    @property
    def dim(self):
        return self.algebra.dim

    def to_ambient(self, v):
        return self.inclusion.apply(v)

    def from_ambient(self, v):
        """Coordinates in B of an ambient vector known to lie in B."""
        try:
            return self.inclusion.solve(v)
        except NoSolution as exc:
            raise InternalInvariant("vector not in the subalgebra") from exc


def _coinvariant_subalgebra(ca):
    f = ca.field
    da = ca.algebra.dim
    incl = comodule_coinvariant_basis(f, da, ca.coaction, ca.hopf.algebra.unit)
    db = incl.cols
    unit_b = incl.solve(ca.algebra.unit)  # 1_A is always coinvariant
    mul = Matrix.zeros(f, db, db * db)
    for i in range(db):
        for j in range(db):
            prod = ca.algebra.product(incl.col(i), incl.col(j))
            try:
                coords = incl.solve(prod)
            except NoSolution as exc:
                raise InternalInvariant("coinvariants not closed under product") from exc
            for k in range(db):
                mul.data[k * db * db + i * db + j] = coords[k]
    b_alg = StructureConstantAlgebra(f, db, mul, unit_b,
                                     [f"b{i}" for i in range(db)])
    return SubalgebraEmbedding(ca.algebra, incl, b_alg)


def coinvariants(ca):
    """B = A^{co H} with its induced multiplication; closure is verified."""
    return ca.coinvariants()


class BModule:
    """Right module over the coinvariant subalgebra B, by action matrices."""

    def __init__(self, base, dim, actions):
        if len(actions) != base.dim:
            raise DimensionMismatch("one action matrix per basis element of B")
        self.base = base
        self.dim = dim
        self.actions = actions  # actions[i] = right action of b_i

    @property
    def field(self):
        return self.base.algebra.field

    def act(self, v, b_coords):
        f = self.field
        out = [f.zero] * self.dim
        for i, c in enumerate(b_coords):
            if c != f.zero:
                col = self.actions[i].apply(v)
                out = [f.add(a, f.mul(c, x)) for a, x in zip(out, col)]
        return out

    def validate(self):
        report = ValidationReport()
        f = self.field
        balg = self.base.algebra
        idm = Matrix.identity(f, self.dim)
        unit_act = Matrix.zeros(f, self.dim, self.dim)
        for i, c in enumerate(balg.unit):
            if c != f.zero:
                unit_act = unit_act + self.actions[i].scale(c)
        report.check("bmodule.unit", unit_act, idm, (self.dim,))
        for i in range(balg.dim):
            for j in range(balg.dim):
                prod = balg.product(basis_vec(f, balg.dim, i), basis_vec(f, balg.dim, j))
                lhs = Matrix.zeros(f, self.dim, self.dim)
                for k, c in enumerate(prod):
                    if c != f.zero:
                        lhs = lhs + self.actions[k].scale(c)
                rhs = self.actions[j] @ self.actions[i]  # m.(bi bj) = (m.bi).bj
                if lhs != rhs:
                    report.fail("bmodule.associativity", (i, j))
        return report


def regular_bmodule(ca):
    """B as a right module over itself."""
    b = ca.coinvariants()
    f = ca.field
    actions = [b.algebra.rmul(basis_vec(f, b.dim, i)) for i in range(b.dim)]
    return BModule(b, b.dim, actions)


def algebra_as_bmodule(ca):
    """A as a right B-module by right multiplication through the inclusion."""
    b = ca.coinvariants()
    actions = [ca.algebra.rmul(b.inclusion.col(i)) for i in range(b.dim)]
    return BModule(b, ca.algebra.dim, actions)


class RelativeHopfModuleData:
    """Right A-module + right H-comodule with the compatibility relation."""

    def __init__(self, dim, actions, coaction):
        self.dim = dim
        self.actions = actions  # one matrix per basis element of A
        self.coaction = coaction

    def act(self, field, v, a_coords):
        out = [field.zero] * self.dim
        for i, c in enumerate(a_coords):
            if c != field.zero:
                col = self.actions[i].apply(v)
                out = [field.add(a, field.mul(c, x)) for a, x in zip(out, col)]
        return out

    def coinvariant_basis(self, ca):
        return comodule_coinvariant_basis(ca.field, self.dim, self.coaction,
                                          ca.hopf.algebra.unit)

    def validate(self, ca):
        f = ca.field
        da, dh, dm = ca.algebra.dim, ca.hopf.dim, self.dim
        report = ValidationReport()
        idm = Matrix.identity(f, dm)
        unit_act = Matrix.zeros(f, dm, dm)
        for i, c in enumerate(ca.algebra.unit):
            if c != f.zero:
                unit_act = unit_act + self.actions[i].scale(c)
        report.check("hopfmodule.action-unit", unit_act, idm, (dm,))
        for i in range(da):
            for j in range(da):
                prod = ca.algebra.product(basis_vec(f, da, i), basis_vec(f, da, j))
                lhs = Matrix.zeros(f, dm, dm)
                for k, c in enumerate(prod):
                    if c != f.zero:
                        lhs = lhs + self.actions[k].scale(c)
                if lhs != self.actions[j] @ self.actions[i]:
                    report.fail("hopfmodule.action-associativity", (i, j))
        rho = self.coaction
        report.check("hopfmodule.coassociativity",
                     rho.kron(Matrix.identity(f, dh)) @ rho,
                     idm.kron(ca.hopf.coalgebra.comul) @ rho, (dm,))
        report.check("hopfmodule.counit",
                     idm.kron(ca.hopf.coalgebra.counit) @ rho, idm, (dm,))
        # rho(m a) = m_[0] a_[0] (x) m_[1] a_[1]
        hmul = ca.hopf.algebra
        for a_idx in range(da):
            lhs = rho @ self.actions[a_idx]
            rhs = Matrix.zeros(f, dm * dh, dm)
            rho_a = ca.coaction.apply(basis_vec(f, da, a_idx))
            for (i, j), c in _pairs(f, rho_a, da, dh):
                term = self.actions[i].kron(hmul.rmul(basis_vec(f, dh, j))) @ rho
                rhs = rhs + term.scale(c)
            if lhs != rhs:
                report.fail("hopfmodule.compatibility", (a_idx,))
        return report


def _pairs(field, vec, d1, d2):
    for flat, c in enumerate(vec):
        if c != field.zero:
            yield (flat // d2, flat % d2), c


class QuotientSpace:
    """Coordinatized quotient of a plain tensor product by a relation span.

    projection @ section = identity; kernel(projection) = span(relations).
    Pivot columns of the row-reduced relation matrix are eliminated; the
    remaining (free) columns, in increasing order, index the quotient basis.
    """

    def __init__(self, field, ambient_dim, relations):
        self.field = field
        self.ambient_dim = ambient_dim
        self.relations = relations
        if relations:
            red, pivots = Matrix.from_rows(field, relations).rref()
        else:
            red, pivots = Matrix.zeros(field, 0, ambient_dim), []
        pivot_set = set(pivots)
        free = [j for j in range(ambient_dim) if j not in pivot_set]
        self.dim = len(free)
        proj = Matrix.zeros(field, self.dim, ambient_dim)
        sect = Matrix.zeros(field, ambient_dim, self.dim)
        for qi, fc in enumerate(free):
            proj.data[qi * ambient_dim + fc] = field.one
            sect.data[fc * self.dim + qi] = field.one
        for r, pc in enumerate(pivots):
            for qi, fc in enumerate(free):
                proj.data[qi * ambient_dim + pc] = field.neg(red.get(r, fc))
        self.projection = proj
        self.section = sect

    def project(self, v):
        return self.projection.apply(v)

    def represent(self, q):
        return self.section.apply(q)

    def check_welldefined(self, ambient_map):
        """True iff projection . ambient_map kills every relation."""
        for rel in self.relations:
            if not vec_is_zero(self.field, self.projection.apply(ambient_map.apply(rel))):
                return False
        return True


class InducedModule:
    """M (x)_B A as a relative Hopf module, with its quotient presentation."""

    def __init__(self, ca, bmodule, quotient, module):
        self.ca = ca
        self.bmodule = bmodule
        self.quotient = quotient
        self.module = module


def tensor_over_B(m, ca):
    """The induction M (x)_B A with verified induced action and coaction."""
    f = ca.field
    b = ca.coinvariants()
    da, dh, dm = ca.algebra.dim, ca.hopf.dim, m.dim
    relations = []
    for i in range(dm):
        em = basis_vec(f, dm, i)
        for k in range(b.dim):
            mb = m.actions[k].apply(em)
            lb = ca.algebra.lmul(b.inclusion.col(k))
            for j in range(da):
                ea = basis_vec(f, da, j)
                rel = [f.sub(x, y) for x, y in
                       zip(kron_vec(f, mb, ea), kron_vec(f, em, lb.apply(ea)))]
                if not vec_is_zero(f, rel):
                    relations.append(rel)
    quot = QuotientSpace(f, dm * da, relations)
    idm = Matrix.identity(f, dm)
    actions = []
    for j in range(da):
        amb = idm.kron(ca.algebra.rmul(basis_vec(f, da, j)))
        if not quot.check_welldefined(amb):
            raise IllDefinedStructure("A-action does not respect the relations")
        actions.append(quot.projection @ amb @ quot.section)
    amb_rho = idm.kron(ca.coaction)
    for rel in quot.relations:
        if not vec_is_zero(f, (quot.projection.kron(Matrix.identity(f, dh))
                               @ amb_rho).apply(rel)):
            raise IllDefinedStructure("coaction does not respect the relations")
    coaction = quot.projection.kron(Matrix.identity(f, dh)) @ amb_rho @ quot.section
    module = RelativeHopfModuleData(quot.dim, actions, coaction)
    return InducedModule(ca, m, quot, module)


def adjunction_unit(m, ca, induced=None):
    """eta_M(m) = class of m (x) 1, with a bijectivity verdict onto
    (M (x)_B A)^{co H}.

    Returns (eta, coords, bijective): eta maps M into quotient coordinates;
    coords expresses eta through the computed coinvariant basis.
    """
    ind = induced if induced is not None else tensor_over_B(m, ca)
    f = ca.field
    cols = [ind.quotient.project(kron_vec(f, basis_vec(f, m.dim, i), ca.algebra.unit))
            for i in range(m.dim)]
    eta = Matrix.from_cols(f, cols, nrows=ind.quotient.dim)
    coinv = ind.module.coinvariant_basis(ca)
    try:
        coords = coinv.solve_matrix(eta)
    except NoSolution as exc:
        raise InternalInvariant("eta does not land in the coinvariants") from exc
    bijective = coords.rows == coords.cols and coords.is_invertible()
    return eta, coords, bijective


def adjunction_counit(n, ca):
    """eps_N: N^{co H} (x)_B A -> N, n (x) a -> n.a, with bijectivity verdict."""
    f = ca.field
    b = ca.coinvariants()
    coinv = n.coinvariant_basis(ca)
    c = coinv.cols
    actions = []
    for k in range(b.dim):
        ambient_act = Matrix.zeros(f, n.dim, n.dim)
        for i, cf in enumerate(b.inclusion.col(k)):
            if cf != f.zero:
                ambient_act = ambient_act + n.actions[i].scale(cf)
        try:
            actions.append(coinv.solve_matrix(ambient_act @ coinv))
        except NoSolution as exc:
            raise InternalInvariant("coinvariants of N not B-stable") from exc
    m = BModule(b, c, actions)
    ind = tensor_over_B(m, ca)
    da = ca.algebra.dim
    cols = []
    for i in range(c):
        for j in range(da):
            cols.append(n.actions[j].apply(coinv.col(i)))
    eps_amb = Matrix.from_cols(f, cols, nrows=n.dim)
    eps = eps_amb @ ind.quotient.section
    bijective = eps.rows == eps.cols and eps.is_invertible()
    return eps, ind, bijective

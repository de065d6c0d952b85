"""Rational endomorphisms: Hom_A(P,Q), the Eq. (14) coaction, the comodule
algebra E = END_A(M (x)_B A) and the identification F = E^{co H} = End_B(M).

At finite dimension every A-linear endomorphism is rational; the coaction
solver below still verifies rationality instance by instance instead of
assuming it.
"""

from .comodule import ComoduleAlgebraData, InternalInvariant, adjunction_unit
from .hopf import StructureConstantAlgebra
from .linalg import Matrix, NoSolution, basis_vec


class NotRational(RuntimeError):
    pass


def hom_A(field, p_actions, q_actions, p_dim, q_dim):
    """Basis of right-A-linear maps P -> Q as q_dim x p_dim matrices."""
    blocks = []
    idp = Matrix.identity(field, p_dim)
    idq = Matrix.identity(field, q_dim)
    for pa, qa in zip(p_actions, q_actions):
        # vec(f @ pa - qa @ f) with row-major vec: f@pa -> (I (x) pa^T) vec f
        blocks.append(idq.kron(pa.transpose()) - qa.kron(idp))
    if not blocks:
        op = Matrix.zeros(field, 0, q_dim * p_dim)
    else:
        from .linalg import vstack
        op = vstack(blocks)
    return [Matrix(field, q_dim, p_dim, v) for v in op.kernel()]


def end_A(ca, module):
    """Basis of A-linear endomorphisms of a relative Hopf module."""
    return hom_A(ca.field, module.actions, module.actions, module.dim,
                 module.dim)


def rational_coaction_matrix(ca, module, f_mat):
    """The map rho(f): P -> P (x) H, rho(f)(p) = f(p_[0])_[0] (x) f(p_[0])_[1] S(p_[1])."""
    field = ca.field
    dh = ca.hopf.dim
    idp = Matrix.identity(field, module.dim)
    hmul = ca.hopf.algebra.mul
    rho = module.coaction
    return (idp.kron(hmul) @ rho.kron(ca.hopf.antipode)
            @ f_mat.kron(Matrix.identity(field, dh)) @ rho)


def rational_coaction(ca, module, basis, f_mat):
    """Coordinates of rho(f) in basis (x) H; raises NotRational if absent.

    Returns a len(basis) x dim(H) coefficient matrix c with
    rho(f) = Sum_{k,h} c[k][h] basis_k (x) e_h.
    """
    field = ca.field
    dh = ca.hopf.dim
    target = rational_coaction_matrix(ca, module, f_mat)
    cols = []
    for k, bk in enumerate(basis):
        for j in range(dh):
            e_col = Matrix(field, dh, 1, basis_vec(field, dh, j))
            cols.append(bk.kron(e_col).data)
    op = Matrix.from_cols(field, cols, nrows=module.dim * dh * module.dim)
    try:
        sol = op.solve(target.data)
    except NoSolution as exc:
        raise NotRational("rho(f) is not in End_A (x) H") from exc
    return Matrix(field, len(basis), dh, sol)


class EndComoduleAlgebra:
    """E = END_A(M (x)_B A) realized on a concrete endomorphism basis."""

    def __init__(self, ca, induced, basis, comodule_algebra):
        self.base = ca                  # the underlying comodule algebra A
        self.induced = induced          # the module M (x)_B A
        self.basis = basis              # endomorphism matrices
        self.ca = comodule_algebra      # E as a ComoduleAlgebraData over H
        self._coord_op = Matrix.from_cols(
            ca.field, [b.data for b in basis],
            nrows=induced.quotient.dim ** 2)

    @property
    def dim(self):
        return len(self.basis)

    def to_matrix(self, coords):
        """Endomorphism matrix of an element given in E-coordinates."""
        f = self.base.field
        n = self.induced.quotient.dim
        out = Matrix.zeros(f, n, n)
        for k, c in enumerate(coords):
            if c != f.zero:
                out = out + self.basis[k].scale(c)
        return out

    def to_coords(self, mat):
        try:
            return self._coord_op.solve(mat.data)
        except NoSolution as exc:
            raise InternalInvariant("matrix not A-linear") from exc


def build_E(ca, induced):
    """Assemble E with multiplication = composition and the Eq. (14) coaction."""
    field = ca.field
    module = induced.module
    basis = end_A(ca, module)
    n = len(basis)
    coord_op = Matrix.from_cols(field, [b.data for b in basis],
                                nrows=module.dim ** 2)
    mul = Matrix.zeros(field, n, n * n)
    for i in range(n):
        for j in range(n):
            coords = coord_op.solve((basis[i] @ basis[j]).data)
            for k in range(n):
                mul.data[k * n * n + i * n + j] = coords[k]
    unit = coord_op.solve(Matrix.identity(field, module.dim).data)
    alg = StructureConstantAlgebra(field, n, mul, unit,
                                   [f"f{i}" for i in range(n)])
    dh = ca.hopf.dim
    coaction = Matrix.zeros(field, n * dh, n)
    for i in range(n):
        c = rational_coaction(ca, module, basis, basis[i])
        for k in range(n):
            for j in range(dh):
                coaction.data[(k * dh + j) * n + i] = c.get(k, j)
    e_ca = ComoduleAlgebraData(ca.hopf, alg, coaction)
    return EndComoduleAlgebra(ca, induced, basis, e_ca)


def verify_eq14(e):
    """Eq. (14): rho(f(p)) = f_[0](p_[0]) (x) f_[1] p_[1], on all basis f."""
    ca = e.base
    field = ca.field
    module = e.induced.module
    dh = ca.hopf.dim
    rho = module.coaction
    hmul = ca.hopf.algebra
    for i in range(e.dim):
        lhs = rho @ e.basis[i]
        rhs = Matrix.zeros(field, module.dim * dh, module.dim)
        rho_f = e.ca.coaction.apply(basis_vec(field, e.dim, i))
        for flat, c in enumerate(rho_f):
            if c != field.zero:
                k, j = flat // dh, flat % dh
                term = e.basis[k].kron(hmul.lmul(basis_vec(field, dh, j))) @ rho
                rhs = rhs + term.scale(c)
        if lhs != rhs:
            return False, i
    return True, None


class CoinvariantIdentification:
    """F = E^{co H} together with the isomorphism onto End_B(M)."""

    def __init__(self, e, embedding, restrict, extend, endb_basis):
        self.e = e
        self.embedding = embedding      # SubalgebraEmbedding F -> E
        self.restrict = restrict        # F-coords -> End_B(M) matrix
        self.extend = extend            # End_B(M) matrix -> F-coords
        self.endb_basis = endb_basis


def build_F(ca, m, e):
    """F = coinvariants(E) with the mutually inverse maps to End_B(M)."""
    field = ca.field
    emb = e.ca.coinvariants()
    eta, _, bij = adjunction_unit(m, ca, e.induced)
    if not bij:
        raise InternalInvariant("eta_M not bijective; extension not Galois")
    b = ca.coinvariants()
    endb_basis = hom_A(field, m.actions, m.actions, m.dim, m.dim)
    endb_op = Matrix.from_cols(field, [g.data for g in endb_basis],
                               nrows=m.dim ** 2)

    def restrict(coords_f):
        phi = e.to_matrix(emb.inclusion.apply(coords_f))
        return eta.solve_matrix(phi @ eta)       # g with eta g = phi eta

    def extend(g_mat):
        amb = g_mat.kron(Matrix.identity(field, ca.algebra.dim))
        phi = e.induced.quotient.projection @ amb @ e.induced.quotient.section
        return emb.from_ambient(e.to_coords(phi))

    return CoinvariantIdentification(e, emb, restrict, extend, endb_basis)


def verify_F_iso(ca, m, ident):
    """Both composites identity + multiplicativity, on basis elements."""
    field = ca.field
    emb = ident.embedding
    for k in range(emb.dim):
        coords = basis_vec(field, emb.dim, k)
        g = ident.restrict(coords)
        if ident.extend(g) != coords:
            return False
    for g in ident.endb_basis:
        if ident.restrict(ident.extend(g)) != g:
            return False
    # algebra map: restrict(x y) = restrict(x) restrict(y)
    for i in range(emb.dim):
        for j in range(emb.dim):
            prod = emb.algebra.product(basis_vec(field, emb.dim, i),
                                       basis_vec(field, emb.dim, j))
            lhs = ident.restrict(prod)
            rhs = ident.restrict(basis_vec(field, emb.dim, i)) \
                @ ident.restrict(basis_vec(field, emb.dim, j))
            if lhs != rhs:
                return False
    return True

"""The two-object categories C_A and C'_A of colinear maps H -> A.

A hom element of class (i, j) is an arrow i -> j; the eight colinearity
constraint shapes are materialized as linear operators on vec(f) and the
hom-spaces as their nullspaces.  Composition of f: i -> j and g: j -> k is
the convolution g * f (outer factor g), matching the functoriality identity
alpha_kj(g) o alpha_ji(f) = alpha_ki(g * f) of the main theorem; in C'_A
the cop-convolution (g ? f)(h) = g(h_(2)) f(h_(1)) is used instead.
"""

from .linalg import Matrix, NotInvertible, basis_vec, perm_legs

CLASSES = ((1, 1), (2, 1), (1, 2), (2, 2))


class NotComposable(ValueError):
    pass


class MembershipViolation(RuntimeError):
    pass


class HomSpaceElement:
    """A map H -> A as a dim(A) x dim(H) matrix, tagged with its class."""

    def __init__(self, matrix, cls, variant):
        self.matrix = matrix
        self.cls = cls
        self.variant = variant          # "C" or "Cprime"

    def __eq__(self, other):
        return (isinstance(other, HomSpaceElement) and self.matrix == other.matrix
                and self.cls == other.cls and self.variant == other.variant)

    def __repr__(self):
        return f"HomSpaceElement({self.cls}, {self.variant})"


class HomSpaceBasis:
    def __init__(self, cls, variant, elements):
        self.cls = cls
        self.variant = variant
        self.elements = elements

    @property
    def dim(self):
        return len(self.elements)

    def coordinate_matrix(self, field, da, dh):
        return Matrix.from_cols(field, [e.matrix.data for e in self.elements],
                                nrows=da * dh)


def _tensor_embed(ca):
    """E1: A -> A (x) H, a -> a (x) 1."""
    f = ca.field
    da = ca.algebra.dim
    from .linalg import kron_vec
    return Matrix.from_cols(
        f, [kron_vec(f, basis_vec(f, da, j), ca.hopf.algebra.unit)
            for j in range(da)], nrows=da * ca.hopf.dim)


def constraint_rhs(ca, f_mat, cls, variant):
    """The required value of rho o f for the given constraint class."""
    field = ca.field
    dh = ca.hopf.dim
    comul = ca.hopf.coalgebra.comul
    idh = Matrix.identity(field, dh)
    s, sbar = ca.hopf.antipode, ca.hopf.antipode_inv
    hmul = ca.hopf.algebra.mul
    sw = perm_legs(field, (dh, dh), (1, 0))
    if cls == (1, 1):
        return _tensor_embed(ca) @ f_mat
    if (cls, variant) in (((2, 1), "C"), ((1, 2), "Cprime")):
        # t(h_(1)) (x) h_(2)
        return f_mat.kron(idh) @ comul
    if (cls, variant) == ((1, 2), "C"):
        # u(h_(2)) (x) S(h_(1))
        return f_mat.kron(s) @ sw @ comul
    if (cls, variant) == ((2, 1), "Cprime"):
        # u'(h_(2)) (x) Sbar(h_(1))
        return f_mat.kron(sbar) @ sw @ comul
    comul3 = idh.kron(comul) @ comul      # h_(1) (x) h_(2) (x) h_(3)
    if (cls, variant) == ((2, 2), "C"):
        # w(h_(2)) (x) S(h_(1)) h_(3)
        move = perm_legs(field, (dh, dh, dh), (1, 0, 2))
        return f_mat.kron(hmul @ s.kron(idh)) @ move @ comul3
    if (cls, variant) == ((2, 2), "Cprime"):
        # w'(h_(2)) (x) h_(3) Sbar(h_(1))
        move = perm_legs(field, (dh, dh, dh), (1, 2, 0))
        return f_mat.kron(hmul @ idh.kron(sbar)) @ move @ comul3
    raise ValueError(f"unknown constraint {cls}/{variant}")


def constraint_defect(ca, f_mat, cls, variant):
    return ca.coaction @ f_mat - constraint_rhs(ca, f_mat, cls, variant)


def membership(ca, f_mat, cls, variant):
    return constraint_defect(ca, f_mat, cls, variant).is_zero()


def hom_space(ca, cls, variant):
    """Nullspace basis of the colinearity constraint (deterministic order)."""
    field = ca.field
    da, dh = ca.algebra.dim, ca.hopf.dim
    nunk = da * dh
    cols = []
    for flat in range(nunk):
        probe = Matrix(field, da, dh,
                       [field.one if i == flat else field.zero
                        for i in range(nunk)])
        cols.append(constraint_defect(ca, probe, cls, variant).data)
    op = Matrix.from_cols(field, cols, nrows=da * dh * dh)
    elems = [HomSpaceElement(Matrix(field, da, dh, v), cls, variant)
             for v in op.kernel()]
    return HomSpaceBasis(cls, variant, elems)


def unit_element(ca, cls=(1, 1), variant="C"):
    """eta_A o eps_H, the convolution unit (identity morphism)."""
    mat = Matrix.from_cols(ca.field, [ca.algebra.unit]) @ ca.hopf.coalgebra.counit
    return HomSpaceElement(mat, cls, variant)


def convolve_matrices(ca, g_mat, f_mat, variant="C"):
    """(g * f)(h) = g(h_(1)) f(h_(2)); cop order for variant C'."""
    comul = ca.hopf.coalgebra.comul
    if variant == "Cprime":
        dh = ca.hopf.dim
        comul = perm_legs(ca.field, (dh, dh), (1, 0)) @ comul
    return ca.algebra.mul @ g_mat.kron(f_mat) @ comul


def convolve(ca, g, f):
    """Composition of arrows f: i -> j then g: j -> k, i.e. g * f."""
    if g.variant != f.variant:
        raise NotComposable("mixed variants")
    if f.cls[1] != g.cls[0]:
        raise NotComposable(f"{g.cls} after {f.cls}")
    cls = (f.cls[0], g.cls[1])
    mat = convolve_matrices(ca, g.matrix, f.matrix, g.variant)
    out = HomSpaceElement(mat, cls, g.variant)
    if not membership(ca, mat, cls, g.variant):
        raise MembershipViolation(f"convolution left class {cls}")
    return out


def gamma_functor(ca, f_prime):
    """gamma(f') = f' o S: C'_A(i, j) -> C_A(i, j)."""
    if f_prime.variant != "Cprime":
        raise ValueError("gamma takes C'_A elements")
    mat = f_prime.matrix @ ca.hopf.antipode
    out = HomSpaceElement(mat, f_prime.cls, "C")
    if not membership(ca, mat, f_prime.cls, "C"):
        raise MembershipViolation(
            f"gamma image fails C_A{f_prime.cls} membership")
    return out


def gamma_bar(ca, f):
    """gammabar(f) = f o Sbar: C_A(i, j) -> C'_A(i, j)."""
    if f.variant != "C":
        raise ValueError("gammabar takes C_A elements")
    mat = f.matrix @ ca.hopf.antipode_inv
    out = HomSpaceElement(mat, f.cls, "Cprime")
    if not membership(ca, mat, f.cls, "Cprime"):
        raise MembershipViolation(
            f"gammabar image fails C'_A{f.cls} membership")
    return out


def convolution_inverse_matrix(ca, f_mat, variant="C"):
    """Two-sided convolution inverse of f, or raise NotInvertible.

    Solves f * g = eta eps linearly, then verifies g * f = eta eps (a
    one-sided inverse in a finite-dimensional algebra is two-sided, but we
    check rather than assume).
    """
    field = ca.field
    da, dh = ca.algebra.dim, ca.hopf.dim
    unit_mat = unit_element(ca).matrix
    nunk = da * dh
    cols = []
    for flat in range(nunk):
        probe = Matrix(field, da, dh,
                       [field.one if i == flat else field.zero
                        for i in range(nunk)])
        cols.append(convolve_matrices(ca, f_mat, probe, variant).data)
    op = Matrix.from_cols(field, cols, nrows=nunk)
    try:
        sol = op.solve(unit_mat.data)
    except Exception as exc:
        raise NotInvertible("no right convolution inverse") from exc
    g_mat = Matrix(field, da, dh, sol)
    if convolve_matrices(ca, g_mat, f_mat, variant) != unit_mat:
        raise NotInvertible("right inverse is not two-sided")
    return g_mat


def convolution_inverse(ca, f):
    """Inverse morphism: f: i -> j invertible gives f^{-1}: j -> i."""
    mat = convolution_inverse_matrix(ca, f.matrix, f.variant)
    cls = (f.cls[1], f.cls[0])
    out = HomSpaceElement(mat, cls, f.variant)
    if not membership(ca, mat, cls, f.variant):
        raise MembershipViolation(
            f"convolution inverse fails {f.variant}{cls} membership")
    return out

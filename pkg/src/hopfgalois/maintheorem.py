"""Theorem 3.1: the category D_M with objects M (x) H and M (x)_B A, the
delta/beta/alpha maps of Lemmas 3.2-3.8, and the full verification of the
commutative triangle C'_E -> C_E -> D_M with the functoriality identities
(3.9.1) and (21a)-(22).

Composition-of-arrows is convolution in the order alpha_kj(g) o alpha_ji(f)
= alpha_ki(g * f); this is the orientation the proofs of (21a)-(22) use
(the statement displays swap the factors in places).
"""

import random

from . import convcat
from .comodule import adjunction_unit, tensor_over_B
from .endomorphism import build_E
from .galois import canonical_map, translation_map
from .linalg import Matrix, NoSolution, basis_vec, kron_vec, tensor_entries


class MembershipViolation(RuntimeError):
    pass


class TheoremContext:
    """Everything Theorem 3.1 needs for one (A, M) instance."""

    def __init__(self, ca, m, corrupt_gamma=False):
        self.ca = ca
        self.m = m
        self.field = ca.field
        self.b = ca.coinvariants()
        self.induced = tensor_over_B(m, ca)
        self.quot = self.induced.quotient
        self.e = build_E(ca, self.induced)
        self.eta, _, eta_bij = adjunction_unit(m, ca, self.induced)
        if not eta_bij:
            from .galois import NotGalois
            raise NotGalois("eta_M is not bijective")
        can = canonical_map(ca)
        if not can.galois:
            from .galois import NotGalois
            raise NotGalois("canonical map not invertible")
        self.tmap = translation_map(ca, can)
        # When corrupt_gamma is set, gamma_12^{-1} "forgets" Sbar — the
        # deliberate negative control of identity (12b).
        self.corrupt_gamma = corrupt_gamma
        f, dh, dm = self.field, ca.hopf.dim, m.dim
        idm = Matrix.identity(f, dm)
        self.idh = Matrix.identity(f, dh)
        # object 1: M (x) H
        self.x1_dim = dm * dh
        self.x1_actions = [m.actions[k].kron(self.idh) for k in range(self.b.dim)]
        self.x1_coaction = idm.kron(ca.hopf.coalgebra.comul)
        # object 2: M (x)_B A in quotient coordinates
        self.x2_dim = self.quot.dim
        self.x2_actions = []
        for k in range(self.b.dim):
            act = Matrix.zeros(f, self.quot.dim, self.quot.dim)
            for a_idx, c in enumerate(self.b.inclusion.col(k)):
                if c != f.zero:
                    act = act + self.induced.module.actions[a_idx].scale(c)
            self.x2_actions.append(act)
        self.x2_coaction = self.induced.module.coaction
        self._dm_cache = {}

    # -- evaluation helpers ------------------------------------------------

    def ev(self, hom_mat, h_vec):
        """Endomorphism matrix of (element of Hom(H,E)) evaluated at h."""
        return self.e.to_matrix(hom_mat.apply(h_vec))

    def eta_inv(self, vec):
        return self.eta.solve(vec)

    def object_data(self, i):
        if i == 1:
            return self.x1_dim, self.x1_actions, self.x1_coaction
        return self.x2_dim, self.x2_actions, self.x2_coaction

    def induced_action(self, a_vec):
        """Right action of an element of A on M (x)_B A."""
        f = self.field
        act = Matrix.zeros(f, self.quot.dim, self.quot.dim)
        for a_idx, c in enumerate(a_vec):
            if c != f.zero:
                act = act + self.induced.module.actions[a_idx].scale(c)
        return act

    # -- D_M hom spaces ----------------------------------------------------

    def dm_hom_space(self, i, j):
        """Basis of Hom_B^H(alpha(i), alpha(j)), by direct linear solve."""
        if (i, j) in self._dm_cache:
            return self._dm_cache[(i, j)]
        f = self.field
        dx, x_actions, x_co = self.object_data(i)
        dy, y_actions, y_co = self.object_data(j)
        nunk = dy * dx
        cols = []
        for flat in range(nunk):
            probe = Matrix(f, dy, dx,
                           [f.one if t == flat else f.zero for t in range(nunk)])
            defect = []
            for xa, ya in zip(x_actions, y_actions):
                defect.extend((probe @ xa - ya @ probe).data)
            defect.extend((y_co @ probe - probe.kron(self.idh) @ x_co).data)
            cols.append(defect)
        op = Matrix.from_cols(f, cols, nrows=len(cols[0]) if cols else 0)
        basis = [Matrix(f, dy, dx, v) for v in op.kernel()]
        self._dm_cache[(i, j)] = basis
        return basis

    def dm_membership(self, mat, i, j):
        dx, x_actions, x_co = self.object_data(i)
        dy, y_actions, y_co = self.object_data(j)
        for xa, ya in zip(x_actions, y_actions):
            if not (mat @ xa - ya @ mat).is_zero():
                return False
        return (y_co @ mat - mat.kron(self.idh) @ x_co).is_zero()

    def dm_coords(self, mat, i, j):
        basis = self.dm_hom_space(i, j)
        op = Matrix.from_cols(self.field, [b.data for b in basis],
                              nrows=mat.rows * mat.cols)
        return op.solve(mat.data)


# -- Lemma 3.2 -------------------------------------------------------------


def delta1(ctx, phi):
    """Hom_B(M (x)_B A, M) -> Hom_B^H(M (x)_B A, M (x) H)."""
    return phi.kron(ctx.idh) @ ctx.x2_coaction


def delta1_bar(ctx, varphi):
    idm = Matrix.identity(ctx.field, ctx.m.dim)
    return idm.kron(ctx.ca.hopf.coalgebra.counit) @ varphi


def delta2(ctx, theta_small):
    """Hom_B(M (x) H, M) -> End_B^H(M (x) H)."""
    return theta_small.kron(ctx.idh) @ ctx.x1_coaction


def delta2_bar(ctx, theta):
    idm = Matrix.identity(ctx.field, ctx.m.dim)
    return idm.kron(ctx.ca.hopf.coalgebra.counit) @ theta


def hom_b_product(ctx, t1, t2):
    """(3.2.1): the transported product Theta . Theta' = Theta o delta_2(Theta')."""
    return t1 @ delta2(ctx, t2)


# -- Lemma 3.3 / Corollary 3.4 ---------------------------------------------


def beta11_tilde(ctx, v_prime_mat):
    f, dm, dh = ctx.field, ctx.m.dim, ctx.ca.hopf.dim
    cols = []
    for mi in range(dm):
        em = ctx.eta.col(mi)                        # class of m (x) 1
        for hj in range(dh):
            w = ctx.ev(v_prime_mat, basis_vec(f, dh, hj)).apply(em)
            cols.append(ctx.eta_inv(w))
    return Matrix.from_cols(f, cols, nrows=dm)


def beta11_hat(ctx, theta_small):
    """Inverse direction: Hom_B(M (x) H, M) -> Hom(H, F) (coords in E)."""
    f, dm, dh, da = ctx.field, ctx.m.dim, ctx.ca.hopf.dim, ctx.ca.algebra.dim
    ida = Matrix.identity(f, da)
    cols = []
    for hj in range(dh):
        th_h = Matrix.from_cols(
            f, [theta_small.apply(kron_vec(f, basis_vec(f, dm, mi),
                                           basis_vec(f, dh, hj)))
                for mi in range(dm)], nrows=dm)
        endo = ctx.quot.projection @ th_h.kron(ida) @ ctx.quot.section
        cols.append(ctx.e.to_coords(endo))
    return Matrix.from_cols(f, cols, nrows=ctx.e.dim)


def beta11(ctx, v_prime_mat):
    return delta2(ctx, beta11_tilde(ctx, v_prime_mat))


# -- Lemma 3.5 -------------------------------------------------------------


def beta21(ctx, t_prime_mat):
    f, dm, dh = ctx.field, ctx.m.dim, ctx.ca.hopf.dim
    cols = []
    for mi in range(dm):
        em = ctx.eta.col(mi)
        for hj in range(dh):
            cols.append(ctx.ev(t_prime_mat, basis_vec(f, dh, hj)).apply(em))
    return Matrix.from_cols(f, cols, nrows=ctx.quot.dim)


def beta21_bar(ctx, psi):
    f, dm, dh, da = ctx.field, ctx.m.dim, ctx.ca.hopf.dim, ctx.ca.algebra.dim
    cols = []
    for hj in range(dh):
        amb_cols = []
        for mi in range(dm):
            base = psi.apply(kron_vec(f, basis_vec(f, dm, mi),
                                      basis_vec(f, dh, hj)))
            for aj in range(da):
                amb_cols.append(ctx.induced.module.actions[aj].apply(base))
        amb = Matrix.from_cols(f, amb_cols, nrows=ctx.quot.dim)
        cols.append(ctx.e.to_coords(amb @ ctx.quot.section))
    return Matrix.from_cols(f, cols, nrows=ctx.e.dim)


# -- Lemma 3.6 / Corollary 3.7 ---------------------------------------------


def beta12_tilde(ctx, u_prime_mat):
    f, dm, dh, da = ctx.field, ctx.m.dim, ctx.ca.hopf.dim, ctx.ca.algebra.dim
    amb_cols = []
    for mi in range(dm):
        for aj in range(da):
            acc = [f.zero] * ctx.quot.dim
            rho_a = ctx.ca.coaction.apply(basis_vec(f, da, aj))
            for (a0, h), c in tensor_entries(f, rho_a, (da, dh)):
                p = ctx.quot.project(kron_vec(f, basis_vec(f, dm, mi),
                                              basis_vec(f, da, a0)))
                w = ctx.ev(u_prime_mat, basis_vec(f, dh, h)).apply(p)
                acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, w)]
            # only the full sum is coinvariant; invert eta after summing
            amb_cols.append(ctx.eta_inv(acc))
    return Matrix.from_cols(f, amb_cols, nrows=dm) @ ctx.quot.section


def alpha12_hat(ctx, phi):
    """Eq. (AA): (alpha^_12(phi)(h))(m (x) a) = Sum phi(m (x) l_i(h)) (x) r_i(h) a."""
    f, dm, dh, da = ctx.field, ctx.m.dim, ctx.ca.hopf.dim, ctx.ca.algebra.dim
    cols = []
    for hj in range(dh):
        rep = ctx.tmap.rep(basis_vec(f, dh, hj))
        amb_cols = []
        for mi in range(dm):
            for aj in range(da):
                acc = [f.zero] * ctx.quot.dim
                for (l, r), c in tensor_entries(f, rep, (da, da)):
                    mv = phi.apply(ctx.quot.project(
                        kron_vec(f, basis_vec(f, dm, mi), basis_vec(f, da, l))))
                    av = ctx.ca.algebra.product(basis_vec(f, da, r),
                                                basis_vec(f, da, aj))
                    term = ctx.quot.project(kron_vec(f, mv, av))
                    acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, term)]
                amb_cols.append(acc)
        amb = Matrix.from_cols(f, amb_cols, nrows=ctx.quot.dim)
        cols.append(ctx.e.to_coords(amb @ ctx.quot.section))
    return Matrix.from_cols(f, cols, nrows=ctx.e.dim)


def beta12(ctx, u_prime_mat):
    return delta1(ctx, beta12_tilde(ctx, u_prime_mat))


# -- Lemma 3.8 -------------------------------------------------------------


def beta22(ctx, w_prime_mat):
    f, dh = ctx.field, ctx.ca.hopf.dim
    cols = []
    for q in range(ctx.quot.dim):
        rho_q = ctx.x2_coaction.apply(basis_vec(f, ctx.quot.dim, q))
        acc = [f.zero] * ctx.quot.dim
        for (qi, h), c in tensor_entries(f, rho_q, (ctx.quot.dim, dh)):
            w = ctx.ev(w_prime_mat, basis_vec(f, dh, h)).apply(
                basis_vec(f, ctx.quot.dim, qi))
            acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, w)]
        cols.append(acc)
    return Matrix.from_cols(f, cols, nrows=ctx.quot.dim)


def alpha22_bar(ctx, kappa):
    f, dm, dh, da = ctx.field, ctx.m.dim, ctx.ca.hopf.dim, ctx.ca.algebra.dim
    cols = []
    for hj in range(dh):
        rep = ctx.tmap.rep(basis_vec(f, dh, hj))
        amb_cols = []
        for mi in range(dm):
            for aj in range(da):
                acc = [f.zero] * ctx.quot.dim
                for (l, r), c in tensor_entries(f, rep, (da, da)):
                    base = kappa.apply(ctx.quot.project(
                        kron_vec(f, basis_vec(f, dm, mi), basis_vec(f, da, l))))
                    ra = ctx.ca.algebra.product(basis_vec(f, da, r),
                                                basis_vec(f, da, aj))
                    term = ctx.induced_action(ra).apply(base)
                    acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, term)]
                amb_cols.append(acc)
        amb = Matrix.from_cols(f, amb_cols, nrows=ctx.quot.dim)
        cols.append(ctx.e.to_coords(amb @ ctx.quot.section))
    return Matrix.from_cols(f, cols, nrows=ctx.e.dim)


# -- the alpha functor ------------------------------------------------------


def _gamma12_inv(ctx, mat):
    if ctx.corrupt_gamma:
        return mat          # negative control: forgets Sbar
    return mat @ ctx.ca.hopf.antipode_inv


def alpha(ctx, cls, mat):
    """alpha_ji on C_E(i, j), as a matrix between the D_M objects."""
    if cls == (1, 1):
        return beta11(ctx, mat @ ctx.ca.hopf.antipode_inv)
    if cls == (1, 2):
        return beta21(ctx, mat @ ctx.ca.hopf.antipode_inv)
    if cls == (2, 1):
        return beta12(ctx, _gamma12_inv(ctx, mat))
    if cls == (2, 2):
        return beta22(ctx, mat @ ctx.ca.hopf.antipode_inv)
    raise ValueError(cls)


def beta(ctx, cls, mat):
    """beta_ji on C'_E(i, j)."""
    if cls == (1, 1):
        return beta11(ctx, mat)
    if cls == (1, 2):
        return beta21(ctx, mat)
    if cls == (2, 1):
        return beta12(ctx, mat)
    if cls == (2, 2):
        return beta22(ctx, mat)
    raise ValueError(cls)


def alpha_inverse(ctx, cls, dm_mat):
    """The inverse map D_M hom -> C_E(i, j)."""
    if cls == (1, 1):
        return beta11_hat(ctx, delta2_bar(ctx, dm_mat)) @ ctx.ca.hopf.antipode
    if cls == (1, 2):
        return beta21_bar(ctx, dm_mat) @ ctx.ca.hopf.antipode
    if cls == (2, 1):
        return alpha12_hat(ctx, delta1_bar(ctx, dm_mat))
    if cls == (2, 2):
        return alpha22_bar(ctx, dm_mat)
    raise ValueError(cls)


# -- full verification ------------------------------------------------------


class TheoremReport:
    def __init__(self):
        self.failures = []
        self.details = {}

    def fail(self, check, witness=None):
        self.failures.append((check, witness))

    @property
    def passed(self):
        return not self.failures


def verify_theorem31(ca, m, corrupt_gamma=False, pair_cap=8, sample=64,
                     seed=0):
    """Dimension equalities, bijectivity, alpha o gamma = beta, and all
    eight composition patterns of (3.9.1)/(21a)-(22)."""
    ctx = TheoremContext(ca, m, corrupt_gamma=corrupt_gamma)
    e_ca = ctx.e.ca
    report = TheoremReport()
    c_spaces, cp_spaces, d_spaces = {}, {}, {}
    for cls in convcat.CLASSES:
        c_spaces[cls] = convcat.hom_space(e_ca, cls, "C")
        cp_spaces[cls] = convcat.hom_space(e_ca, cls, "Cprime")
        d_spaces[cls] = ctx.dm_hom_space(cls[0], cls[1])
        report.details[f"dim C{cls}"] = c_spaces[cls].dim
        report.details[f"dim D{cls}"] = len(d_spaces[cls])
        if c_spaces[cls].dim != len(d_spaces[cls]):
            report.fail("dimension-equality", cls)

    # bijectivity of alpha_ji and membership of images
    alpha_coords = {}
    for cls in convcat.CLASSES:
        i, j = cls
        cols = []
        ok = True
        for el in c_spaces[cls].elements:
            try:
                img = alpha(ctx, cls, el.matrix)
            except NoSolution:
                report.fail("alpha-membership", cls)
                ok = False
                break
            if not ctx.dm_membership(img, i, j):
                report.fail("alpha-membership", cls)
                ok = False
                break
            try:
                cols.append(ctx.dm_coords(img, i, j))
            except NoSolution:
                report.fail("alpha-membership", cls)
                ok = False
                break
        if not ok:
            continue
        mat = Matrix.from_cols(ctx.field, cols, nrows=len(d_spaces[cls]))
        alpha_coords[cls] = mat
        if not (mat.rows == mat.cols and mat.is_invertible()):
            report.fail("alpha-bijective", cls)

    # alpha o gamma = beta on every C' basis element
    for cls in convcat.CLASSES:
        for el in cp_spaces[cls].elements:
            try:
                g = convcat.gamma_functor(e_ca, el)
                equal = alpha(ctx, cls, g.matrix) == beta(ctx, cls, el.matrix)
            except (NoSolution, convcat.MembershipViolation):
                equal = False
            if not equal:
                report.fail("alpha-gamma-beta", cls)
                break

    # round trips alpha_inverse o alpha = id on hom bases
    for cls in convcat.CLASSES:
        for el in c_spaces[cls].elements:
            try:
                back = alpha_inverse(ctx, cls, alpha(ctx, cls, el.matrix))
                equal = back == el.matrix
            except NoSolution:
                equal = False
            if not equal:
                report.fail("alpha-round-trip", cls)
                break

    # the eight composition patterns (3.9.1) incl. (21a)-(22)
    rng = random.Random(seed)
    for i in (1, 2):
        for j in (1, 2):
            for k in (1, 2):
                label = PATTERN_LABELS[(i, j, k)]
                fs = c_spaces[(i, j)].elements
                gs = c_spaces[(j, k)].elements
                pairs = [(fi, gi) for fi in range(len(fs))
                         for gi in range(len(gs))]
                if max(len(fs), len(gs)) > pair_cap and len(pairs) > sample:
                    pairs = rng.sample(pairs, sample)
                for fi, gi in pairs:
                    f_el, g_el = fs[fi], gs[gi]
                    try:
                        comp = convcat.convolve_matrices(e_ca, g_el.matrix,
                                                         f_el.matrix, "C")
                        lhs = alpha(ctx, (i, k), comp)
                        rhs = alpha(ctx, (j, k), g_el.matrix) \
                            @ alpha(ctx, (i, j), f_el.matrix)
                        equal = lhs == rhs
                    except (NoSolution, MembershipViolation,
                            convcat.MembershipViolation):
                        equal = False
                    if not equal:
                        report.fail(label, (i, j, k, fi, gi))
                        break
                else:
                    continue
                break
    return report


# arrows f: i -> j, g: j -> k; names follow the displayed identity list
PATTERN_LABELS = {
    (1, 1, 1): "3.9.1-111",
    (1, 1, 2): "21a",       # psi o theta
    (1, 2, 2): "21b",       # kappa o psi
    (1, 2, 1): "11",        # phi o psi
    (2, 2, 1): "12a",       # phi o kappa
    (2, 1, 1): "12b",       # theta o phi
    (2, 1, 2): "22",        # psi o phi
    (2, 2, 2): "3.9.1-222",
}

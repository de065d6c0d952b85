"""Cleft extensions and crossed products: clefting data t, u, the measuring
omega_t and cocycle sigma of Thm 5.2's proof, B#_sigma H (Prop 5.1), the
closed-form canonical inverse and translation map of Remark 5.3, the
Structure Theorem 5.2 round-trip, and the smash-product case (Thm 5.4).

Representations: omega: H (x) B -> B as a db x (dh*db) matrix, sigma,
sigmabar: H (x) H -> B as db x dh^2 matrices, all with left-leg-major
flattening.  The assembled B#_sigma H lives on B (x) H with flat index
b*dh + h and coaction id_B (x) Delta.
"""

import itertools
import random
from fractions import Fraction

from . import convcat
from .comodule import ComoduleAlgebraData, InternalInvariant
from .galois import canonical_map, translation_map
from .hopf import StructureConstantAlgebra, comul_iterated
from .linalg import (Matrix, NotInvertible, basis_vec, kron_vec,
                     tensor_entries, vec_add, vec_scale)

EXHAUSTIVE_CAP = 10 ** 6
QQ_COEFF_BOUND = 3


class InvariantFailure(RuntimeError):
    pass


class InvalidCrossedData(ValueError):
    def __init__(self, condition, witness=None):
        super().__init__(f"crossed-product condition violated: {condition}"
                         + (f" at {witness}" if witness is not None else ""))
        self.condition = condition
        self.witness = witness


class NotFound:
    """Search certificate: exhaustive means the failure is a proof."""

    def __init__(self, exhaustive, searched, dim, detail=""):
        self.exhaustive = exhaustive
        self.searched = searched
        self.dim = dim
        self.detail = detail

    def __repr__(self):
        kind = "exhaustive" if self.exhaustive else "sampled"
        return f"NotFound({kind}, searched={self.searched}, dim={self.dim})"


class CleftingDatum:
    """Convolution invertible t in Hom^H(H, A) with inverse u, normalized."""

    def __init__(self, t, u, normalized):
        self.t = t                  # HomSpaceElement, class (2, 1)
        self.u = u                  # HomSpaceElement, class (1, 2)
        self.normalized = normalized


# -- clefting search ---------------------------------------------------------


def _lin_comb(field, mats, coeffs):
    out = Matrix.zeros(field, mats[0].rows, mats[0].cols)
    for m, c in zip(mats, coeffs):
        if c != field.zero:
            out = out + m.scale(c)
    return out


def _normalize(ca, t_mat, u_mat):
    """t' = u(1) t with inverse u t(1); verified before returning."""
    one_h = ca.hopf.algebra.unit
    alg = ca.algebra
    tp = alg.lmul(u_mat.apply(one_h)) @ t_mat
    up = alg.rmul(t_mat.apply(one_h)) @ u_mat
    unit_mat = convcat.unit_element(ca).matrix
    if tp.apply(one_h) != alg.unit:
        raise InternalInvariant("normalization failed: t(1) != 1")
    if (convcat.convolve_matrices(ca, tp, up) != unit_mat
            or convcat.convolve_matrices(ca, up, tp) != unit_mat):
        raise InternalInvariant("normalization broke the convolution inverse")
    if not convcat.membership(ca, tp, (2, 1), "C"):
        raise InternalInvariant("normalized t lost colinearity")
    t_el = convcat.HomSpaceElement(tp, (2, 1), "C")
    u_el = convcat.HomSpaceElement(up, (1, 2), "C")
    return CleftingDatum(t_el, u_el, normalized=True)


def _attempt(ca, mats, coeffs):
    field = ca.field
    t_mat = _lin_comb(field, mats, coeffs)
    if t_mat.is_zero():
        return None
    try:
        u_mat = convcat.convolution_inverse_matrix(ca, t_mat, "C")
    except NotInvertible:
        return None
    return _normalize(ca, t_mat, u_mat)


def find_cleft(ca, seed=0, tries=500, enumerate_cap=EXHAUSTIVE_CAP):
    """Search for a normalized clefting datum on ca.

    Over F_p the search is exhaustive (a proof on failure) whenever
    p^dim(Hom^H(H,A)) <= enumerate_cap; otherwise, and over Q, it samples
    `tries` seeded small-coefficient combinations.
    """
    field = ca.field
    hs = convcat.hom_space(ca, (2, 1), "C")
    mats = [el.matrix for el in hs.elements]
    d = len(mats)
    if d == 0:
        return NotFound(True, 0, 0, "Hom^H(H,A) = 0")
    if field.kind == "Fp" and field.p ** d <= enumerate_cap:
        searched = 0
        for coeffs in itertools.product(range(field.p), repeat=d):
            searched += 1
            datum = _attempt(ca, mats, coeffs)
            if datum is not None:
                return datum
        return NotFound(True, searched, d,
                        "no convolution invertible element (full enumeration)")
    # deterministic warm start: basis elements and the all-ones combination
    warm = [tuple(field.one if i == j else field.zero for i in range(d))
            for j in range(d)]
    warm.append((field.one,) * d)
    for coeffs in warm:
        datum = _attempt(ca, mats, coeffs)
        if datum is not None:
            return datum
    rng = random.Random(seed)
    for _ in range(tries):
        if field.kind == "Fp":
            coeffs = tuple(rng.randrange(field.p) for _ in range(d))
        else:
            coeffs = tuple(field.from_int(
                rng.randint(-QQ_COEFF_BOUND, QQ_COEFF_BOUND))
                for _ in range(d))
        datum = _attempt(ca, mats, coeffs)
        if datum is not None:
            return datum
    return NotFound(False, tries + len(warm), d,
                    f"not found in {tries} seeded samples")


# -- crossed-product data ----------------------------------------------------


class CrossedProductData:
    """Measuring omega, cocycle sigma (with sigmabar) and B#_sigma H."""

    def __init__(self, base, hopf, omega, sigma, sigma_bar, algebra):
        self.base = base            # StructureConstantAlgebra B
        self.hopf = hopf
        self.omega = omega          # db x (dh*db)
        self.sigma = sigma          # db x dh^2
        self.sigma_bar = sigma_bar
        self.algebra = algebra      # ComoduleAlgebraData on B (x) H

    def act(self, h_vec, b_vec):
        return self.omega.apply(kron_vec(self.base.field, h_vec, b_vec))

    def coc(self, h_vec, k_vec):
        return self.sigma.apply(kron_vec(self.base.field, h_vec, k_vec))

    def coc_bar(self, h_vec, k_vec):
        return self.sigma_bar.apply(kron_vec(self.base.field, h_vec, k_vec))


def _omega_apply(field, omega, h_vec, b_vec):
    return omega.apply(kron_vec(field, h_vec, b_vec))


def _sigma_apply(field, sigma, h_vec, k_vec):
    return sigma.apply(kron_vec(field, h_vec, k_vec))


def _conv2(base, hopf, s1, s2):
    """Convolution on Hom(H (x) H, B): s1(h1 (x) k1) s2(h2 (x) k2)."""
    f = base.field
    dh = hopf.dim
    cols = []
    for h in range(dh):
        dlh = list(tensor_entries(f, hopf.coalgebra.comul.apply(
            basis_vec(f, dh, h)), (dh, dh)))
        for k in range(dh):
            dlk = list(tensor_entries(f, hopf.coalgebra.comul.apply(
                basis_vec(f, dh, k)), (dh, dh)))
            acc = [f.zero] * base.dim
            for (h1, h2), c1 in dlh:
                for (k1, k2), c2 in dlk:
                    v = base.product(
                        _sigma_apply(f, s1, basis_vec(f, dh, h1),
                                     basis_vec(f, dh, k1)),
                        _sigma_apply(f, s2, basis_vec(f, dh, h2),
                                     basis_vec(f, dh, k2)))
                    acc = vec_add(f, acc, vec_scale(f, f.mul(c1, c2), v))
            cols.append(acc)
    return Matrix.from_cols(f, cols, nrows=base.dim)


def _eps2_unit(base, hopf):
    """(h (x) k) -> eps(h) eps(k) 1_B, the convolution unit on H (x) H."""
    f = base.field
    dh = hopf.dim
    eps = hopf.coalgebra.counit
    cols = []
    for h in range(dh):
        eh = eps.apply(basis_vec(f, dh, h))[0]
        for k in range(dh):
            ek = eps.apply(basis_vec(f, dh, k))[0]
            cols.append(vec_scale(f, f.mul(eh, ek), base.unit))
    return Matrix.from_cols(f, cols, nrows=base.dim)


def _sigma_conv_inverse(base, hopf, sigma):
    """Solve sigma * x = eps eps 1 linearly, then verify two-sidedness."""
    f = base.field
    db, dh = base.dim, hopf.dim
    unit_mat = _eps2_unit(base, hopf)
    nunk = db * dh * dh
    cols = []
    for flat in range(nunk):
        probe = Matrix(f, db, dh * dh,
                       [f.one if i == flat else f.zero for i in range(nunk)])
        cols.append(_conv2(base, hopf, sigma, probe).data)
    op = Matrix.from_cols(f, cols, nrows=nunk)
    try:
        sol = op.solve(unit_mat.data)
    except Exception as exc:
        raise InvalidCrossedData("sigma not convolution invertible") from exc
    sbar = Matrix(f, db, dh * dh, sol)
    if _conv2(base, hopf, sbar, sigma) != unit_mat:
        raise InvalidCrossedData("sigma inverse is one-sided only")
    return sbar


def _prop51_violations(base, hopf, omega, sigma, sigma_bar):
    """All Prop 5.1 conditions; returns [(condition, witness), ...]."""
    f = base.field
    db, dh = base.dim, hopf.dim
    eps = hopf.coalgebra.counit
    eb = [basis_vec(f, db, i) for i in range(db)]
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    dl3 = [list(tensor_entries(f, comul_iterated(hopf, eh[i], 3),
                               (dh, dh, dh))) for i in range(dh)]
    out = []

    def om(hv, bv):
        return _omega_apply(f, omega, hv, bv)

    def sg(hv, kv):
        return _sigma_apply(f, sigma, hv, kv)

    def sgb(hv, kv):
        return _sigma_apply(f, sigma_bar, hv, kv)

    # measuring: h.1 = eps(h)1 and h.(bc) = (h1.b)(h2.c)
    for h in range(dh):
        if om(eh[h], base.unit) != vec_scale(f, eps.apply(eh[h])[0], base.unit):
            out.append(("measuring h.1=eps(h)1", (h,)))
            break
    for h in range(dh):
        bad = False
        for i in range(db):
            for j in range(db):
                lhs = om(eh[h], base.product(eb[i], eb[j]))
                rhs = [f.zero] * db
                for (h1, h2), c in dl[h]:
                    v = base.product(om(eh[h1], eb[i]), om(eh[h2], eb[j]))
                    rhs = vec_add(f, rhs, vec_scale(f, c, v))
                if lhs != rhs:
                    out.append(("measuring h.(bc)=(h1.b)(h2.c)", (h, i, j)))
                    bad = True
                    break
            if bad:
                break
        if bad:
            break
    # twisted module: 1.b = b and (5.1.2)
    for i in range(db):
        if om(hopf.algebra.unit, eb[i]) != eb[i]:
            out.append(("twisted-module 1.b=b", (i,)))
            break
    done = False
    for h in range(dh):
        for k in range(dh):
            for i in range(db):
                lhs = om(eh[h], om(eh[k], eb[i]))
                rhs = [f.zero] * db
                for (h1, h2, h3), c1 in dl3[h]:
                    for (k1, k2, k3), c2 in dl3[k]:
                        mid = om(hopf.algebra.product(eh[h2], eh[k2]), eb[i])
                        v = base.product(sg(eh[h1], eh[k1]),
                                         base.product(mid, sgb(eh[h3], eh[k3])))
                        rhs = vec_add(f, rhs, vec_scale(f, f.mul(c1, c2), v))
                if lhs != rhs:
                    out.append(("(5.1.2)", (h, k, i)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    # normalized cocycle: sigma(h (x) 1) = sigma(1 (x) h) = eps(h) 1
    for h in range(dh):
        e = vec_scale(f, eps.apply(eh[h])[0], base.unit)
        if sg(eh[h], hopf.algebra.unit) != e or sg(hopf.algebra.unit, eh[h]) != e:
            out.append(("normalization sigma(h,1)=sigma(1,h)=eps(h)1", (h,)))
            break
    # cocycle condition (5.1.3)
    done = False
    for h in range(dh):
        for k in range(dh):
            for l in range(dh):
                lhs = [f.zero] * db
                for (h1, h2), c1 in dl[h]:
                    for (k1, k2), c2 in dl[k]:
                        for (l1, l2), c3 in dl[l]:
                            v = base.product(
                                om(eh[h1], sg(eh[k1], eh[l1])),
                                sg(eh[h2], hopf.algebra.product(eh[k2], eh[l2])))
                            rhs_c = f.mul(f.mul(c1, c2), c3)
                            lhs = vec_add(f, lhs, vec_scale(f, rhs_c, v))
                rhs = [f.zero] * db
                for (h1, h2), c1 in dl[h]:
                    for (k1, k2), c2 in dl[k]:
                        v = base.product(
                            sg(eh[h1], eh[k1]),
                            sg(hopf.algebra.product(eh[h2], eh[k2]), eh[l]))
                        rhs = vec_add(f, rhs, vec_scale(f, f.mul(c1, c2), v))
                if lhs != rhs:
                    out.append(("(5.1.3)", (h, k, l)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return out


def build_crossed_product(base, hopf, omega, sigma, sigma_bar=None):
    """Assemble B#_sigma H per (5.1.1) after validating Prop 5.1's conditions.

    Raises InvalidCrossedData naming the violated condition; the returned
    CrossedProductData carries the comodule algebra with coaction
    id_B (x) Delta, whose coinvariants are verified to be B # 1.
    """
    f = base.field
    db, dh = base.dim, hopf.dim
    if sigma_bar is None:
        sigma_bar = _sigma_conv_inverse(base, hopf, sigma)
    else:
        unit_mat = _eps2_unit(base, hopf)
        if (_conv2(base, hopf, sigma, sigma_bar) != unit_mat
                or _conv2(base, hopf, sigma_bar, sigma) != unit_mat):
            raise InvalidCrossedData("sigma_bar is not the convolution inverse")
    violations = _prop51_violations(base, hopf, omega, sigma, sigma_bar)
    if violations:
        raise InvalidCrossedData(*violations[0])
    n = db * dh
    eb = [basis_vec(f, db, i) for i in range(db)]
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl3 = [list(tensor_entries(f, comul_iterated(hopf, eh[i], 3),
                               (dh, dh, dh))) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    mul = Matrix.zeros(f, n, n * n)
    for bi in range(db):
        for hi in range(dh):
            x = bi * dh + hi
            for cj in range(db):
                for kj in range(dh):
                    y = cj * dh + kj
                    acc = [f.zero] * n
                    for (h1, h2, h3), c1 in dl3[hi]:
                        for (k1, k2), c2 in dl[kj]:
                            bpart = base.product(
                                eb[bi],
                                base.product(
                                    _omega_apply(f, omega, eh[h1], eb[cj]),
                                    _sigma_apply(f, sigma, eh[h2], eh[k1])))
                            hpart = hopf.algebra.product(eh[h3], eh[k2])
                            acc = vec_add(f, acc, vec_scale(
                                f, f.mul(c1, c2), kron_vec(f, bpart, hpart)))
                    for r in range(n):
                        mul.data[r * n * n + x * n + y] = acc[r]
    unit = kron_vec(f, base.unit, hopf.algebra.unit)
    labels = [f"{bl}#{hl}" for bl in base.labels for hl in hopf.labels]
    alg = StructureConstantAlgebra(f, n, mul, unit, labels)
    rep = alg.validate()
    if not rep.passed:
        raise InternalInvariant(
            f"Prop 5.1 held but B#H not associative/unital: {rep.failures[0]}")
    coaction = Matrix.identity(f, db).kron(hopf.coalgebra.comul)
    ca = ComoduleAlgebraData(hopf, alg, coaction)
    rep = ca.validate()
    if not rep.passed:
        raise InternalInvariant(f"B#H comodule axioms failed: {rep.failures[0]}")
    coinv = ca.coinvariants()
    if coinv.dim != db:
        raise InternalInvariant("coinvariants of B#H are not B # 1")
    for i in range(db):
        coinv.from_ambient(kron_vec(f, eb[i], hopf.algebra.unit))
    return CrossedProductData(base, hopf, omega, sigma, sigma_bar, ca)


def extract_crossed_data(datum, ca):
    """omega_t, sigma, sigmabar from a normalized clefting datum (Thm 5.2)."""
    if not datum.normalized:
        raise InvariantFailure("clefting datum must be normalized first")
    f = ca.field
    alg = ca.algebra
    hopf = ca.hopf
    b = ca.coinvariants()
    db, dh = b.dim, hopf.dim
    t_mat, u_mat = datum.t.matrix, datum.u.matrix
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]

    def in_b(vec, what, witness):
        try:
            return b.from_ambient(vec)
        except InternalInvariant as exc:
            raise InvariantFailure(
                f"{what} at {witness} is not coinvariant") from exc

    # omega_t(h (x) b) = t(h1) b u(h2)
    cols = []
    for h in range(dh):
        for i in range(db):
            amb = b.to_ambient(basis_vec(f, db, i))
            acc = [f.zero] * alg.dim
            for (h1, h2), c in dl[h]:
                v = alg.product(t_mat.apply(eh[h1]),
                                alg.product(amb, u_mat.apply(eh[h2])))
                acc = vec_add(f, acc, vec_scale(f, c, v))
            cols.append(in_b(acc, "omega_t value", (h, i)))
    omega = Matrix.from_cols(f, cols, nrows=db)
    # sigma(h (x) k) = t(h1) t(k1) u(h2 k2)
    cols = []
    for h in range(dh):
        for k in range(dh):
            acc = [f.zero] * alg.dim
            for (h1, h2), c1 in dl[h]:
                for (k1, k2), c2 in dl[k]:
                    v = alg.product(
                        t_mat.apply(eh[h1]),
                        alg.product(t_mat.apply(eh[k1]), u_mat.apply(
                            hopf.algebra.product(eh[h2], eh[k2]))))
                    acc = vec_add(f, acc, vec_scale(f, f.mul(c1, c2), v))
            cols.append(in_b(acc, "sigma value", (h, k)))
    sigma = Matrix.from_cols(f, cols, nrows=db)
    # sigmabar(h (x) k) = t(h1 k1) u(k2) u(h2)
    cols = []
    for h in range(dh):
        for k in range(dh):
            acc = [f.zero] * alg.dim
            for (h1, h2), c1 in dl[h]:
                for (k1, k2), c2 in dl[k]:
                    v = alg.product(
                        t_mat.apply(hopf.algebra.product(eh[h1], eh[k1])),
                        alg.product(u_mat.apply(eh[k2]), u_mat.apply(eh[h2])))
                    acc = vec_add(f, acc, vec_scale(f, f.mul(c1, c2), v))
            cols.append(in_b(acc, "sigmabar value", (h, k)))
    sigma_bar = Matrix.from_cols(f, cols, nrows=db)
    try:
        return build_crossed_product(b.algebra, hopf, omega, sigma, sigma_bar)
    except InvalidCrossedData as exc:
        raise InvariantFailure(str(exc)) from exc


# -- Remark 5.3 / closed-form canonical inverse ------------------------------


class CrossedInverseResult:
    def __init__(self, can_data, tmap, failures):
        self.can = can_data
        self.tmap = tmap
        self.failures = failures

    @property
    def passed(self):
        return not self.failures


def _one_sharp(cp, h_vec):
    """1_B # h as a vector of B#H."""
    return kron_vec(cp.base.field, cp.base.unit, h_vec)


def crossed_canonical_inverse(cp):
    """Thm 5.2 (2)=>(3): the closed-form can^{-1} and Remark 5.3's gamma.

    Verifies entry-for-entry that the displayed inverse
    can^{-1}(b (x) h (x) k) = b sigmabar(h1 S(k2) (x) k3) (x) h2 S(k1) (x) k4
    equals the matrix inverse, and that Remark 5.3's l_i (x) r_i, t and u
    reproduce the computed translation map.
    """
    f = cp.base.field
    db, dh = cp.base.dim, cp.hopf.dim
    hopf = cp.hopf
    ca = cp.algebra
    s = hopf.antipode
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    eb = [basis_vec(f, db, i) for i in range(db)]
    failures = []
    can = canonical_map(ca)
    if not can.galois:
        return CrossedInverseResult(can, None, [("can-not-bijective", None)])
    quot = can.induced.quotient
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    dl4 = [list(tensor_entries(f, comul_iterated(hopf, eh[i], 4), (dh,) * 4))
           for i in range(dh)]
    # closed-form inverse, compared column by column against can.inverse
    for bi in range(db):
        for hi in range(dh):
            for ki in range(dh):
                acc = [f.zero] * quot.dim
                for (h1, h2), c1 in dl[hi]:
                    for (k1, k2, k3, k4), c2 in dl4[ki]:
                        barg = hopf.algebra.product(eh[h1], s.apply(eh[k2]))
                        bpart = cp.base.product(
                            eb[bi], cp.coc_bar(barg, eh[k3]))
                        left = kron_vec(
                            f, bpart,
                            hopf.algebra.product(eh[h2], s.apply(eh[k1])))
                        right = _one_sharp(cp, eh[k4])
                        acc = vec_add(f, acc, vec_scale(
                            f, f.mul(c1, c2),
                            quot.project(kron_vec(f, left, right))))
                flat = (bi * dh + hi) * dh + ki
                if acc != can.inverse.col(flat):
                    failures.append(("closed-form-inverse", (bi, hi, ki)))
    tmap = translation_map(ca, can)
    # Remark 5.3: Sum l_i(h) (x) r_i(h)
    #   = (sigmabar(S(h2) (x) h3) 1_B # S(h1)) (x)_B (1_B # h4)
    for hi in range(dh):
        acc = [f.zero] * quot.dim
        for (h1, h2, h3, h4), c in dl4[hi]:
            bpart = cp.coc_bar(s.apply(eh[h2]), eh[h3])
            left = kron_vec(f, bpart, s.apply(eh[h1]))
            right = _one_sharp(cp, eh[h4])
            acc = vec_add(f, acc, vec_scale(
                f, c, quot.project(kron_vec(f, left, right))))
        if acc != tmap.value(eh[hi]):
            failures.append(("remark-5.3-gamma", (hi,)))
    # Remark 5.3: t(h) = 1 # h, u(h) = sigmabar(S(h2) (x) h3) # S(h1)
    t_mat = Matrix.from_cols(f, [_one_sharp(cp, eh[h]) for h in range(dh)],
                             nrows=db * dh)
    u_cols = []
    for hi in range(dh):
        acc = [f.zero] * db * dh
        for (h1, h2, h3), c in tensor_entries(
                f, comul_iterated(hopf, eh[hi], 3), (dh,) * 3):
            bpart = cp.coc_bar(s.apply(eh[h2]), eh[h3])
            acc = vec_add(f, acc, vec_scale(
                f, c, kron_vec(f, bpart, s.apply(eh[h1]))))
        u_cols.append(acc)
    u_mat = Matrix.from_cols(f, u_cols, nrows=db * dh)
    unit_mat = convcat.unit_element(ca).matrix
    if not convcat.membership(ca, t_mat, (2, 1), "C"):
        failures.append(("remark-5.3-t-colinear", None))
    if (convcat.convolve_matrices(ca, t_mat, u_mat) != unit_mat
            or convcat.convolve_matrices(ca, u_mat, t_mat) != unit_mat):
        failures.append(("remark-5.3-u-inverse", None))
    return CrossedInverseResult(can, tmap, failures)


# -- Theorem 5.2 round trip --------------------------------------------------


class LegReport:
    def __init__(self, name):
        self.name = name
        self.ok = True
        self.failures = []
        self.detail = ""

    def fail(self, what, witness=None):
        self.ok = False
        self.failures.append((what, witness))


class StructureTheoremReport:
    def __init__(self):
        self.legs = {}
        self.datum = None
        self.crossed = None

    @property
    def passed(self):
        return all(leg.ok for leg in self.legs.values())

    @property
    def all_failed(self):
        return all(not leg.ok for leg in self.legs.values())


def _psi_matrix(ca, b, t_mat):
    """psi(b (x) h) = b t(h) as a matrix B (x) H -> A."""
    f = ca.field
    db, dh = b.dim, ca.hopf.dim
    cols = []
    for i in range(db):
        lm = ca.algebra.lmul(b.to_ambient(basis_vec(f, db, i)))
        for h in range(dh):
            cols.append(lm.apply(t_mat.col(h)))
    return Matrix.from_cols(f, cols, nrows=ca.algebra.dim)


def _varphi_matrix(ca, b, u_mat):
    """varphi(a) = a_[0] u(a_[1]) (x) a_[2] as a matrix A -> B (x) H."""
    f = ca.field
    da, dh, db = ca.algebra.dim, ca.hopf.dim, b.dim
    rho2 = Matrix.identity(f, da).kron(ca.hopf.coalgebra.comul) @ ca.coaction
    cols = []
    for a in range(da):
        # group by the a_[2] leg: only Sum a_[0] u(a_[1]) is coinvariant
        partial = [[f.zero] * da for _ in range(dh)]
        for (a0, a1, a2), c in tensor_entries(
                f, rho2.apply(basis_vec(f, da, a)), (da, dh, dh)):
            v = ca.algebra.product(basis_vec(f, da, a0),
                                   u_mat.apply(basis_vec(f, dh, a1)))
            partial[a2] = vec_add(f, partial[a2], vec_scale(f, c, v))
        acc = [f.zero] * (db * dh)
        for a2 in range(dh):
            bcoords = b.from_ambient(partial[a2])
            acc = vec_add(f, acc, kron_vec(f, bcoords, basis_vec(f, dh, a2)))
        cols.append(acc)
    return Matrix.from_cols(f, cols, nrows=db * dh)


def _check_bh_iso(ca, b, psi, leg):
    """psi: B (x) H -> A must be a B-linear H-colinear bijection."""
    f = ca.field
    db, dh = b.dim, ca.hopf.dim
    idh = Matrix.identity(f, dh)
    if not (psi.rows == psi.cols and psi.is_invertible()):
        leg.fail("psi-not-bijective")
        return
    for i in range(db):
        lhs = psi @ b.algebra.lmul(basis_vec(f, db, i)).kron(idh)
        rhs = ca.algebra.lmul(b.to_ambient(basis_vec(f, db, i))) @ psi
        if lhs != rhs:
            leg.fail("psi-not-B-linear", (i,))
            break
    x_co = Matrix.identity(f, db).kron(ca.hopf.coalgebra.comul)
    if ca.coaction @ psi != psi.kron(idh) @ x_co:
        leg.fail("psi-not-colinear")


def _find_bh_iso(ca, b, seed, tries):
    """Search an invertible element of the B-linear colinear maps B(x)H -> A."""
    f = ca.field
    da, db, dh = ca.algebra.dim, b.dim, ca.hopf.dim
    if da != db * dh:
        return None
    idh = Matrix.identity(f, dh)
    x_co = Matrix.identity(f, db).kron(ca.hopf.coalgebra.comul)
    x_acts = [b.algebra.lmul(basis_vec(f, db, i)).kron(idh) for i in range(db)]
    a_acts = [ca.algebra.lmul(b.to_ambient(basis_vec(f, db, i)))
              for i in range(db)]
    nunk = da * da
    cols = []
    for flat in range(nunk):
        probe = Matrix(f, da, da,
                       [f.one if t == flat else f.zero for t in range(nunk)])
        defect = []
        for xa, aa in zip(x_acts, a_acts):
            defect.extend((probe @ xa - aa @ probe).data)
        defect.extend((ca.coaction @ probe - probe.kron(idh) @ x_co).data)
        cols.append(defect)
    op = Matrix.from_cols(f, cols, nrows=len(cols[0]))
    mats = [Matrix(f, da, da, v) for v in op.kernel()]
    if not mats:
        return None
    d = len(mats)
    candidates = [tuple(f.one if i == j else f.zero for i in range(d))
                  for j in range(d)]
    candidates.append((f.one,) * d)
    if f.kind == "Fp" and f.p ** d <= EXHAUSTIVE_CAP:
        candidates = itertools.product(range(f.p), repeat=d)
    else:
        rng = random.Random(seed)
        extra = []
        for _ in range(tries):
            if f.kind == "Fp":
                extra.append(tuple(rng.randrange(f.p) for _ in range(d)))
            else:
                extra.append(tuple(f.from_int(
                    rng.randint(-QQ_COEFF_BOUND, QQ_COEFF_BOUND))
                    for _ in range(d)))
        candidates = list(candidates) + extra
    for coeffs in candidates:
        psi = _lin_comb(f, mats, coeffs)
        if psi.rows == psi.cols and psi.is_invertible():
            return psi
    return None


def structure_theorem_check(ca, seed=0, tries=500):
    """Thm 5.2 (1)=>(2)=>(3)=>(1), each leg reported independently."""
    f = ca.field
    b = ca.coinvariants()
    db, dh = b.dim, ca.hopf.dim
    report = StructureTheoremReport()

    leg1 = LegReport("1->2")
    report.legs["1->2"] = leg1
    datum = find_cleft(ca, seed=seed, tries=tries)
    if isinstance(datum, NotFound):
        leg1.fail("not-cleft", repr(datum))
    else:
        report.datum = datum
        try:
            cp = extract_crossed_data(datum, ca)
        except InvariantFailure as exc:
            cp = None
            leg1.fail("extraction", str(exc))
        if cp is not None:
            report.crossed = cp
            psi = _psi_matrix(ca, b, datum.t.matrix)
            varphi = _varphi_matrix(ca, b, datum.u.matrix)
            if psi @ varphi != Matrix.identity(f, ca.algebra.dim):
                leg1.fail("psi-varphi-not-id")
            if varphi @ psi != Matrix.identity(f, db * dh):
                leg1.fail("varphi-psi-not-id")
            _check_bh_iso(ca, b, psi, leg1)
            # transported multiplication equals (5.1.1)
            n = db * dh
            for x in range(n):
                bad = False
                for y in range(n):
                    transported = varphi.apply(ca.algebra.product(
                        psi.col(x), psi.col(y)))
                    direct = cp.algebra.algebra.product(
                        basis_vec(f, n, x), basis_vec(f, n, y))
                    if transported != direct:
                        leg1.fail("transported-mult-vs-5.1.1", (x, y))
                        bad = True
                        break
                if bad:
                    break

    leg2 = LegReport("2->3")
    report.legs["2->3"] = leg2
    if report.crossed is None:
        leg2.fail("no-crossed-product", "leg (1) produced no B#H")
    else:
        res = crossed_canonical_inverse(report.crossed)
        for what, witness in res.failures:
            leg2.fail(what, witness)
        smash_ca = report.crossed.algebra
        if smash_ca.algebra.dim != db * dh:
            leg2.fail("shape", "dim B#H != dim B * dim H")

    leg3 = LegReport("3->1")
    report.legs["3->1"] = leg3
    psi3 = _find_bh_iso(ca, b, seed, tries)
    if psi3 is None:
        leg3.fail("no-BH-isomorphism")
    else:
        t_cols = [psi3.apply(kron_vec(f, b.algebra.unit, basis_vec(f, dh, h)))
                  for h in range(dh)]
        t_mat = Matrix.from_cols(f, t_cols, nrows=ca.algebra.dim)
        if not convcat.membership(ca, t_mat, (2, 1), "C"):
            leg3.fail("t-not-colinear")
        try:
            convcat.convolution_inverse_matrix(ca, t_mat, "C")
        except NotInvertible:
            leg3.fail("t-not-convolution-invertible")
    return report


# -- Theorem 5.4: smash products ---------------------------------------------


class SmashReport:
    def __init__(self):
        self.status = "inconclusive"    # found | none | inconclusive
        self.t = None
        self.sigma_trivial = None
        self.iso_ok = None
        self.detail = ""

    @property
    def passed(self):
        return self.status == "found" and self.sigma_trivial and self.iso_ok


def _algebra_map_search(ca, mats, seed=0, enumerate_cap=EXHAUSTIVE_CAP):
    """Find an algebra map in span(mats); returns (t_mat or None, status)."""
    f = ca.field
    d = len(mats)
    dh = ca.hopf.dim
    if d == 0:
        return None, "none"

    def is_algebra_map(t_mat):
        if t_mat.apply(ca.hopf.algebra.unit) != ca.algebra.unit:
            return False
        for i in range(dh):
            for j in range(dh):
                prod = ca.hopf.algebra.product(basis_vec(f, dh, i),
                                               basis_vec(f, dh, j))
                lhs = t_mat.apply(prod)
                rhs = ca.algebra.product(t_mat.apply(basis_vec(f, dh, i)),
                                         t_mat.apply(basis_vec(f, dh, j)))
                if lhs != rhs:
                    return False
        return True

    if f.kind == "Fp":
        if f.p ** d > enumerate_cap:
            rng = random.Random(seed)
            for _ in range(enumerate_cap // max(1, d)):
                t_mat = _lin_comb(f, mats, tuple(
                    rng.randrange(f.p) for _ in range(d)))
                if is_algebra_map(t_mat):
                    return t_mat, "found"
            return None, "inconclusive"
        for coeffs in itertools.product(range(f.p), repeat=d):
            t_mat = _lin_comb(f, mats, coeffs)
            if is_algebra_map(t_mat):
                return t_mat, "found"
        return None, "none"
    # over Q: the conditions are quadratic in the coefficients; solve exactly
    import sympy
    cs = sympy.symbols(f"c0:{d}")
    da = ca.algebra.dim

    def sym_t(col):
        return [sum(sympy.Rational(m.get(r, col)) * cs[i]
                    for i, m in enumerate(mats)) for r in range(da)]

    def sym_apply_t(h_vec):
        out = [sympy.Integer(0)] * da
        for j, c in enumerate(h_vec):
            if c != f.zero:
                tc = sym_t(j)
                out = [o + sympy.Rational(c) * v for o, v in zip(out, tc)]
        return out

    def sym_prod(x, y):
        out = [sympy.Integer(0)] * da
        for r in range(da):
            acc = sympy.Integer(0)
            for a in range(da):
                if x[a] == 0:
                    continue
                for bb in range(da):
                    coeff = ca.algebra.mul.get(r, a * da + bb)
                    if coeff != f.zero:
                        acc += sympy.Rational(coeff) * x[a] * y[bb]
            out[r] = acc
        return out

    eqs = []
    tv = sym_apply_t(ca.hopf.algebra.unit)
    for r in range(da):
        eqs.append(sympy.expand(tv[r] - sympy.Rational(ca.algebra.unit[r])))
    for i in range(dh):
        ti = sym_t(i)
        for j in range(dh):
            tj = sym_t(j)
            prod = ca.hopf.algebra.product(basis_vec(f, dh, i),
                                           basis_vec(f, dh, j))
            lhs = sym_apply_t(prod)
            rhs = sym_prod(ti, tj)
            for r in range(da):
                eqs.append(sympy.expand(lhs[r] - rhs[r]))
    sols = sympy.solve([e for e in eqs if e != 0], list(cs), dict=True)
    if not sols:
        return None, "none"
    saw_free = False
    samples = [sympy.Integer(0), sympy.Integer(1), sympy.Integer(-1),
               sympy.Integer(2)]
    for sol in sols:
        free = set(c for c in cs if c not in sol)
        for v in sol.values():
            free |= v.free_symbols
        free = sorted(free, key=lambda sym: sym.name)
        assignments = [dict(sol)]
        if free:
            saw_free = True
            assignments = []
            for combo in itertools.product(samples, repeat=len(free)):
                subs = dict(zip(free, combo))
                assignments.append(
                    {c: (sol[c].subs(subs) if c in sol else subs.get(c, 0))
                     for c in cs})
        for assign in assignments:
            vals = []
            rational = True
            for c in cs:
                v = sympy.nsimplify(assign.get(c, sympy.Integer(0)))
                if not v.is_rational:
                    rational = False
                    break
                num, den = sympy.fraction(v)
                vals.append(Fraction(int(num), int(den)))
            if not rational:
                continue
            t_mat = _lin_comb(f, mats, tuple(vals))
            if is_algebra_map(t_mat):
                return t_mat, "found"
    if saw_free:
        return None, "inconclusive"
    return None, "none"


def smash_check(ca, seed=0, tries=500, enumerate_cap=EXHAUSTIVE_CAP):
    """Thm 5.4: search for a colinear algebra map t; on success verify the
    extracted sigma is trivial and A is isomorphic to the smash product B#H."""
    f = ca.field
    report = SmashReport()
    hs = convcat.hom_space(ca, (2, 1), "C")
    mats = [el.matrix for el in hs.elements]
    t_mat, status = _algebra_map_search(ca, mats, seed=seed,
                                        enumerate_cap=enumerate_cap)
    report.status = status
    if t_mat is None:
        report.detail = ("no colinear algebra map exists"
                         if status == "none" else "search inconclusive")
        return report
    report.t = t_mat
    # t is invertible with inverse t o S (verified, not assumed)
    u_mat = t_mat @ ca.hopf.antipode
    unit_mat = convcat.unit_element(ca).matrix
    if (convcat.convolve_matrices(ca, t_mat, u_mat) != unit_mat
            or convcat.convolve_matrices(ca, u_mat, t_mat) != unit_mat):
        report.status = "found"
        report.sigma_trivial = False
        report.detail = "t o S is not the convolution inverse"
        return report
    datum = CleftingDatum(
        convcat.HomSpaceElement(t_mat, (2, 1), "C"),
        convcat.HomSpaceElement(u_mat, (1, 2), "C"), normalized=True)
    cp = extract_crossed_data(datum, ca)
    report.sigma_trivial = cp.sigma == _eps2_unit(cp.base, ca.hopf)
    b = ca.coinvariants()
    psi = _psi_matrix(ca, b, t_mat)
    leg = LegReport("smash-iso")
    _check_bh_iso(ca, b, psi, leg)
    # transported multiplication must agree with the assembled B#H
    n = b.dim * ca.hopf.dim
    if leg.ok:
        inv = psi.invert()
        for x in range(n):
            ok = True
            for y in range(n):
                transported = inv.apply(ca.algebra.product(psi.col(x),
                                                           psi.col(y)))
                direct = cp.algebra.algebra.product(
                    basis_vec(f, n, x), basis_vec(f, n, y))
                if transported != direct:
                    leg.fail("smash-mult", (x, y))
                    ok = False
                    break
            if not ok:
                break
    report.iso_ok = leg.ok
    if not leg.ok:
        report.detail = str(leg.failures[0])
    return report

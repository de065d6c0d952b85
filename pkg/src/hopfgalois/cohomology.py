"""Sweedler first cohomology for cocommutative H acting on commutative B:
Z^1, B^1, H^1, the set Omega_A of colinear algebra maps, the equivalence ~,
the groupoid X_A (Thm 5.6), the bijection F (Prop 5.7), and Lemma 5.5.

Cocycles v: H -> B are db x dh matrices; the module-algebra action is a
db x (dh*db) matrix with left-leg-major flattening, as in module cleft.
"""

import itertools
import random
from fractions import Fraction

from . import cleft, convcat
from .comodule import InternalInvariant
from .hopf import ValidationReport, is_cocommutative
from .linalg import (Matrix, basis_vec, kron_vec, tensor_entries, vec_add,
                     vec_scale)

EXHAUSTIVE_CAP = 10 ** 6
QQ_COEFF_BOUND = 3


class HypothesisViolated(RuntimeError):
    pass


class SearchInconclusive(RuntimeError):
    pass


class HModuleAlgebraAction:
    """Left H-module algebra action on B (the untwisted case of Lemma 5.5)."""

    def __init__(self, hopf, base, action):
        self.hopf = hopf
        self.base = base            # StructureConstantAlgebra
        self.action = action        # db x (dh * db)

    @property
    def field(self):
        return self.base.field

    def act(self, h_vec, b_vec):
        return self.action.apply(kron_vec(self.field, h_vec, b_vec))

    def validate(self):
        f = self.field
        db, dh = self.base.dim, self.hopf.dim
        eps = self.hopf.coalgebra.counit
        eb = [basis_vec(f, db, i) for i in range(db)]
        eh = [basis_vec(f, dh, i) for i in range(dh)]
        dl = [list(tensor_entries(f, self.hopf.coalgebra.comul.apply(eh[i]),
                                  (dh, dh))) for i in range(dh)]
        report = ValidationReport()
        for i in range(db):
            if self.act(self.hopf.algebra.unit, eb[i]) != eb[i]:
                report.fail("1.b=b", (i,))
                break
        for h in range(dh):
            e = vec_scale(f, eps.apply(eh[h])[0], self.base.unit)
            if self.act(eh[h], self.base.unit) != e:
                report.fail("h.1=eps(h)1", (h,))
                break
        done = False
        for h in range(dh):
            for i in range(db):
                for j in range(db):
                    lhs = self.act(eh[h], self.base.product(eb[i], eb[j]))
                    rhs = [f.zero] * db
                    for (h1, h2), c in dl[h]:
                        v = self.base.product(self.act(eh[h1], eb[i]),
                                              self.act(eh[h2], eb[j]))
                        rhs = vec_add(f, rhs, vec_scale(f, c, v))
                    if lhs != rhs:
                        report.fail("h.(bc)=(h1.b)(h2.c)", (h, i, j))
                        done = True
                        break
                if done:
                    break
            if done:
                break
        for h in range(dh):
            bad = False
            for k in range(dh):
                hk = self.hopf.algebra.product(eh[h], eh[k])
                for i in range(db):
                    if self.act(eh[h], self.act(eh[k], eb[i])) != self.act(hk, eb[i]):
                        report.fail("h.(k.b)=(hk).b", (h, k, i))
                        bad = True
                        break
                if bad:
                    break
            if bad:
                break
        return report


def trivial_action(hopf, base):
    """h.b = eps(h) b."""
    f = base.field
    db, dh = base.dim, hopf.dim
    eps = hopf.coalgebra.counit
    cols = []
    for h in range(dh):
        eh = eps.apply(basis_vec(f, dh, h))[0]
        for i in range(db):
            cols.append(vec_scale(f, eh, basis_vec(f, db, i)))
    return HModuleAlgebraAction(hopf, base, Matrix.from_cols(f, cols, nrows=db))


def action_from_cleft(ca, datum):
    """omega_t on B = A^{co H}, per Eq. (omega) of Thm 5.2's proof."""
    f = ca.field
    b = ca.coinvariants()
    hopf = ca.hopf
    db, dh = b.dim, hopf.dim
    t_mat, u_mat = datum.t.matrix, datum.u.matrix
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    cols = []
    for h in range(dh):
        for i in range(db):
            amb = b.to_ambient(basis_vec(f, db, i))
            acc = [f.zero] * ca.algebra.dim
            for (h1, h2), c in dl[h]:
                v = ca.algebra.product(t_mat.apply(eh[h1]),
                                       ca.algebra.product(amb, u_mat.apply(eh[h2])))
                acc = vec_add(f, acc, vec_scale(f, c, v))
            cols.append(b.from_ambient(acc))
    return HModuleAlgebraAction(hopf, b.algebra,
                                Matrix.from_cols(f, cols, nrows=db))


def _gate(hopf, base):
    if not is_cocommutative(hopf):
        raise HypothesisViolated("H is not cocommutative")
    if not base.is_commutative():
        raise HypothesisViolated("B is not commutative")


# -- convolution on Hom(H, B) ------------------------------------------------


def conv_b(hopf, base, f_mat, g_mat):
    return base.mul @ f_mat.kron(g_mat) @ hopf.coalgebra.comul


def conv_unit_b(hopf, base):
    return (Matrix.from_cols(base.field, [base.unit])
            @ hopf.coalgebra.counit)


def conv_inverse_b(hopf, base, f_mat):
    """Two-sided convolution inverse in Hom(H, B), or None."""
    f = base.field
    db, dh = base.dim, hopf.dim
    unit_mat = conv_unit_b(hopf, base)
    nunk = db * dh
    cols = []
    for flat in range(nunk):
        probe = Matrix(f, db, dh,
                       [f.one if i == flat else f.zero for i in range(nunk)])
        cols.append(conv_b(hopf, base, f_mat, probe).data)
    op = Matrix.from_cols(f, cols, nrows=nunk)
    try:
        sol = op.solve(unit_mat.data)
    except Exception:
        return None
    g_mat = Matrix(f, db, dh, sol)
    if conv_b(hopf, base, g_mat, f_mat) != unit_mat:
        return None
    return g_mat


# -- Lemma 5.5 ---------------------------------------------------------------


def lemma55_check(ca, datum1, datum2):
    """omega_t is datum-independent and a module-algebra action on B."""
    b = ca.coinvariants()
    _gate(ca.hopf, b.algebra)
    act1 = action_from_cleft(ca, datum1)
    act2 = action_from_cleft(ca, datum2)
    report = ValidationReport()
    if act1.action != act2.action:
        report.fail("omega-datum-dependent")
    inner = act1.validate()
    for failure in inner.failures:
        report.fail(*failure)
    return report


# -- Z^1, B^1, H^1 -----------------------------------------------------------


def z1_membership(act, v_mat):
    """Normalized cocycle: v(1)=1, v(hk)=(h1.v(k))v(h2), conv invertible."""
    f = act.field
    base, hopf = act.base, act.hopf
    db, dh = base.dim, hopf.dim
    if v_mat.apply(hopf.algebra.unit) != base.unit:
        return False
    if conv_inverse_b(hopf, base, v_mat) is None:
        return False
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    for h in range(dh):
        for k in range(dh):
            lhs = v_mat.apply(hopf.algebra.product(eh[h], eh[k]))
            rhs = [f.zero] * db
            for (h1, h2), c in dl[h]:
                v = base.product(act.act(eh[h1], v_mat.col(k)),
                                 v_mat.apply(eh[h2]))
                rhs = vec_add(f, rhs, vec_scale(f, c, v))
            if lhs != rhs:
                return False
    return True


def b1_element(act, b_vec):
    """f_b(h) = (h.b) b^{-1}; raises ValueError for non-invertible b."""
    f = act.field
    base, hopf = act.base, act.hopf
    b_inv = base.element_inverse(b_vec)
    if b_inv is None:
        raise ValueError("b is not invertible in B")
    cols = [base.product(act.act(basis_vec(f, hopf.dim, h), b_vec), b_inv)
            for h in range(hopf.dim)]
    return Matrix.from_cols(f, cols, nrows=base.dim)


def _invertible_in_span(base, kernel_vecs, seed=0, tries=200):
    """Search an invertible element of B inside span(kernel_vecs)."""
    f = base.field
    d = len(kernel_vecs)
    if d == 0:
        return None
    def comb(coeffs):
        out = [f.zero] * base.dim
        for v, c in zip(kernel_vecs, coeffs):
            out = vec_add(f, out, vec_scale(f, c, v))
        return out
    if f.kind == "Fp" and f.p ** d <= EXHAUSTIVE_CAP:
        for coeffs in itertools.product(range(f.p), repeat=d):
            b = comb(coeffs)
            if base.element_inverse(b) is not None:
                return b
        return None
    candidates = [tuple(f.one if i == j else f.zero for i in range(d))
                  for j in range(d)]
    candidates.append((f.one,) * d)
    rng = random.Random(seed)
    for _ in range(tries):
        if f.kind == "Fp":
            candidates.append(tuple(rng.randrange(f.p) for _ in range(d)))
        else:
            candidates.append(tuple(
                f.from_int(rng.randint(-QQ_COEFF_BOUND, QQ_COEFF_BOUND))
                for _ in range(d)))
    for coeffs in candidates:
        b = comb(coeffs)
        if base.element_inverse(b) is not None:
            return b
    return None


def cohomologous(act, v_mat, v1_mat, seed=0):
    """v ~ v1 iff v = f_b * v1 for invertible b; linearized per the identity
    (v * v1^{-1})(h) . b = h . b, solved in b and sampled for invertibility."""
    f = act.field
    base, hopf = act.base, act.hopf
    db, dh = base.dim, hopf.dim
    v1_inv = conv_inverse_b(hopf, base, v1_mat)
    if v1_inv is None:
        raise ValueError("v1 is not convolution invertible")
    w = conv_b(hopf, base, v_mat, v1_inv)
    blocks = []
    for h in range(dh):
        # lmul_B(w(h)) b = (h . b): both sides linear in b
        act_h = Matrix.from_cols(
            f, [act.act(basis_vec(f, dh, h), basis_vec(f, db, i))
                for i in range(db)], nrows=db)
        blocks.append((base.lmul(w.apply(basis_vec(f, dh, h))) - act_h).data)
    op = Matrix(f, dh * db, db, [x for blk in blocks for x in blk])
    kernel = op.kernel()
    b = _invertible_in_span(base, kernel, seed=seed)
    if b is None:
        return False
    return v_mat == conv_b(hopf, base, b1_element(act, b), v1_mat)


def h1_classes(act, candidates, seed=0):
    """Partition a list of cocycles into cohomology classes (union-find)."""
    reps = []
    classes = []
    for v in candidates:
        for idx, r in enumerate(reps):
            if cohomologous(act, v, r, seed=seed):
                classes[idx].append(v)
                break
        else:
            reps.append(v)
            classes.append([v])
    return classes


def z1_enumerate(act, enumerate_cap=EXHAUSTIVE_CAP):
    """All of Z^1(H, B): exhaustive over F_p, exact quadratic solve over Q."""
    f = act.field
    base, hopf = act.base, act.hopf
    db, dh = base.dim, hopf.dim
    n = db * dh
    if f.kind == "Fp":
        if f.p ** n > enumerate_cap:
            raise SearchInconclusive(
                f"|F_{f.p}|^{n} exceeds the enumeration cap")
        out = []
        for entries in itertools.product(range(f.p), repeat=n):
            v = Matrix(f, db, dh, list(entries))
            if z1_membership(act, v):
                out.append(v)
        return out
    # over Q: v(1) = 1 is linear, the cocycle law quadratic; solve exactly
    import sympy
    xs = sympy.symbols(f"x0:{n}")

    def sym_col(j):
        return [xs[r * dh + j] for r in range(db)]

    def sym_apply(h_vec):
        out = [sympy.Integer(0)] * db
        for j, c in enumerate(h_vec):
            if c != f.zero:
                col = sym_col(j)
                out = [o + sympy.Rational(c) * v for o, v in zip(out, col)]
        return out

    def sym_prod_b(x, y):
        out = []
        for r in range(db):
            acc = sympy.Integer(0)
            for a in range(db):
                for bb in range(db):
                    coeff = base.mul.get(r, a * db + bb)
                    if coeff != f.zero:
                        acc += sympy.Rational(coeff) * x[a] * y[bb]
            out.append(acc)
        return out

    eh = [basis_vec(f, dh, i) for i in range(dh)]
    dl = [list(tensor_entries(f, hopf.coalgebra.comul.apply(eh[i]), (dh, dh)))
          for i in range(dh)]
    eqs = []
    lhs1 = sym_apply(hopf.algebra.unit)
    for r in range(db):
        eqs.append(sympy.expand(lhs1[r] - sympy.Rational(base.unit[r])))
    for h in range(dh):
        for k in range(dh):
            lhs = sym_apply(hopf.algebra.product(eh[h], eh[k]))
            rhs = [sympy.Integer(0)] * db
            for (h1, h2), c in dl[h]:
                # (h1 . v(k)) is linear in the unknowns
                acted = [sympy.Integer(0)] * db
                vk = sym_col(k)
                for i in range(db):
                    col = act.act(eh[h1], basis_vec(f, db, i))
                    acted = [a + sympy.Rational(cc) * vk[i]
                             for a, cc in zip(acted, col)]
                term = sym_prod_b(acted, sym_apply(eh[h2]))
                rhs = [r0 + sympy.Rational(c) * t for r0, t in zip(rhs, term)]
            for r in range(db):
                eqs.append(sympy.expand(lhs[r] - rhs[r]))
    sols = sympy.solve([e for e in eqs if e != 0], list(xs), dict=True)
    out = []
    for sol in sols:
        free = set(c for c in xs if c not in sol)
        for v in sol.values():
            free |= v.free_symbols
        if free:
            raise SearchInconclusive("Z^1 has a positive-dimensional family")
        vals = []
        ok = True
        for x in xs:
            v = sympy.nsimplify(sol.get(x, sympy.Integer(0)))
            if not v.is_rational:
                ok = False
                break
            num, den = sympy.fraction(v)
            vals.append(Fraction(int(num), int(den)))
        if not ok:
            continue
        v_mat = Matrix(f, db, dh, vals)
        if z1_membership(act, v_mat) and v_mat not in out:
            out.append(v_mat)
    return out


# -- Omega_A -----------------------------------------------------------------


def omega_membership(ca, t_mat):
    """t in Omega_A: H-colinear algebra map."""
    f = ca.field
    dh = ca.hopf.dim
    if not convcat.membership(ca, t_mat, (2, 1), "C"):
        return False
    if t_mat.apply(ca.hopf.algebra.unit) != ca.algebra.unit:
        return False
    for i in range(dh):
        for j in range(dh):
            prod = ca.hopf.algebra.product(basis_vec(f, dh, i),
                                           basis_vec(f, dh, j))
            if t_mat.apply(prod) != ca.algebra.product(
                    t_mat.apply(basis_vec(f, dh, i)),
                    t_mat.apply(basis_vec(f, dh, j))):
                return False
    return True


def omega_equivalence(ca, t1_mat, t2_mat, seed=0):
    """t1 ~ t2 iff b t1(h) = t2(h) b for some invertible b in B (linear in b)."""
    f = ca.field
    b = ca.coinvariants()
    db, dh = b.dim, ca.hopf.dim
    blocks = []
    for h in range(dh):
        rows = []
        for i in range(db):
            amb = b.to_ambient(basis_vec(f, db, i))
            diff = vec_add(
                f, ca.algebra.product(amb, t1_mat.col(h)),
                vec_scale(f, f.neg(f.one),
                          ca.algebra.product(t2_mat.col(h), amb)))
            rows.append(diff)
        blocks.append(Matrix.from_cols(f, rows, nrows=ca.algebra.dim).data)
    op = Matrix(f, dh * ca.algebra.dim, db,
                [x for blk in blocks for x in blk])
    kernel = op.kernel()
    return _invertible_in_span(b.algebra, kernel, seed=seed) is not None


def omega_classes(ca, candidates, seed=0):
    reps, classes = [], []
    for t in candidates:
        for idx, r in enumerate(reps):
            if omega_equivalence(ca, t, r, seed=seed):
                classes[idx].append(t)
                break
        else:
            reps.append(t)
            classes.append([t])
    return classes


def _embed_v(ca, b, v_mat):
    """iota o v: H -> A for a B-valued map v."""
    return b.inclusion @ v_mat


def omega_enumerate(ca, act=None, base_point=None, seed=0,
                    enumerate_cap=EXHAUSTIVE_CAP):
    """All of Omega_A: exhaustive over F_p within cap; over Q generated as
    {v * t0 | v in Z^1} from a base point (complete by Prop 5.7)."""
    f = ca.field
    b = ca.coinvariants()
    hs = convcat.hom_space(ca, (2, 1), "C")
    mats = [el.matrix for el in hs.elements]
    d = len(mats)
    if f.kind == "Fp" and f.p ** d <= enumerate_cap:
        out = []
        for coeffs in itertools.product(range(f.p), repeat=d):
            t = cleft._lin_comb(f, mats, coeffs)
            if omega_membership(ca, t):
                out.append(t)
        return out
    if base_point is None:
        base_point, status = cleft._algebra_map_search(
            ca, mats, seed=seed, enumerate_cap=enumerate_cap)
        if base_point is None:
            if status == "none":
                return []
            raise SearchInconclusive("no Omega_A base point found")
    if act is None:
        datum = cleft.CleftingDatum(
            convcat.HomSpaceElement(base_point, (2, 1), "C"),
            convcat.HomSpaceElement(base_point @ ca.hopf.antipode, (1, 2), "C"),
            normalized=True)
        act = action_from_cleft(ca, datum)
    out = []
    for v in z1_enumerate(act, enumerate_cap=enumerate_cap):
        t = convcat.convolve_matrices(ca, _embed_v(ca, b, v), base_point, "C")
        if not omega_membership(ca, t):
            raise InternalInvariant("v * t0 left Omega_A (Thm 5.6 item 2)")
        if t not in out:
            out.append(t)
    return out


# -- Theorem 5.6: the groupoid X_A -------------------------------------------


class GroupoidReport:
    def __init__(self):
        self.failures = []
        self.vacuous = False
        self.sizes = {}

    def fail(self, what, witness=None):
        self.failures.append((what, witness))

    @property
    def passed(self):
        return not self.failures


def groupoid_xa_check(ca, seed=0, enumerate_cap=EXHAUSTIVE_CAP):
    """All six closure items of Thm 5.6 plus invertibility of every morphism."""
    b = ca.coinvariants()
    _gate(ca.hopf, b.algebra)
    f = ca.field
    hopf = ca.hopf
    s = hopf.antipode
    datum = cleft.find_cleft(ca, seed=seed)
    if isinstance(datum, cleft.NotFound):
        raise HypothesisViolated(f"A is not cleft: {datum!r}")
    act = action_from_cleft(ca, datum)
    report = GroupoidReport()
    z1 = z1_enumerate(act, enumerate_cap=enumerate_cap)
    omega = omega_enumerate(ca, act=act, seed=seed,
                            enumerate_cap=enumerate_cap)
    x22 = [v @ hopf.antipode_inv for v in z1]     # w with w o S in Z^1
    x12 = [t @ s for t in omega]
    report.sizes = {"Z1": len(z1), "Omega": len(omega),
                    "X22": len(x22), "X12": len(x12)}

    def in_z1_ambient(m):
        """Membership of an A-valued map whose values must lie in B."""
        cols = []
        for h in range(hopf.dim):
            try:
                cols.append(b.from_ambient(m.col(h)))
            except InternalInvariant:
                return False
        return z1_membership(act, Matrix.from_cols(f, cols, nrows=b.dim))

    def in_x22_ambient(m):
        cols = []
        for h in range(hopf.dim):
            try:
                cols.append(b.from_ambient(m.col(h)))
            except InternalInvariant:
                return False
        w = Matrix.from_cols(f, cols, nrows=b.dim)
        return z1_membership(act, w @ s)

    def in_x12(m):
        return omega_membership(ca, m @ hopf.antipode_inv)

    # Z^1 group structure
    unit_b = conv_unit_b(hopf, act.base)
    if z1 and not z1_membership(act, unit_b):
        report.fail("Z1-unit")
    for i, v in enumerate(z1):
        inv = conv_inverse_b(hopf, act.base, v)
        if inv is None or not z1_membership(act, inv):
            report.fail("Z1-inverse", (i,))
            break
    for i, v in enumerate(z1):
        bad = False
        for j, v2 in enumerate(z1):
            if not z1_membership(act, conv_b(hopf, act.base, v, v2)):
                report.fail("Z1-closure", (i, j))
                bad = True
                break
        if bad:
            break

    if not omega:
        report.vacuous = True
        return report

    emb = lambda v: _embed_v(ca, b, v)
    conv_a = lambda g, h: convcat.convolve_matrices(ca, g, h, "C")
    # 1) t * u1 in Z^1 for t, t1 in Omega, u1 = t1 o S
    for i, t in enumerate(omega):
        bad = False
        for j, t1 in enumerate(omega):
            if not in_z1_ambient(conv_a(t, t1 @ s)):
                report.fail("closure-1 t*u1 in Z1", (i, j))
                bad = True
                break
        if bad:
            break
    # 2) v * t in Omega
    for i, v in enumerate(z1):
        bad = False
        for j, t in enumerate(omega):
            if not omega_membership(ca, conv_a(emb(v), t)):
                report.fail("closure-2 v*t in Omega", (i, j))
                bad = True
                break
        if bad:
            break
    # 3) t * w in Omega for w in X22
    for i, t in enumerate(omega):
        bad = False
        for j, w in enumerate(x22):
            if not omega_membership(ca, conv_a(t, emb(w))):
                report.fail("closure-3 t*w in Omega", (i, j))
                bad = True
                break
        if bad:
            break
    # 4) u * t1 in X22 for u = t o S
    for i, t in enumerate(omega):
        bad = False
        for j, t1 in enumerate(omega):
            if not in_x22_ambient(conv_a(t @ s, t1)):
                report.fail("closure-4 u*t1 in X22", (i, j))
                bad = True
                break
        if bad:
            break
    # 5) w * u in X12
    for i, w in enumerate(x22):
        bad = False
        for j, t in enumerate(omega):
            if not in_x12(conv_a(emb(w), t @ s)):
                report.fail("closure-5 w*u in X12", (i, j))
                bad = True
                break
        if bad:
            break
    # 6) u * v in X12
    for i, t in enumerate(omega):
        bad = False
        for j, v in enumerate(z1):
            if not in_x12(conv_a(t @ s, emb(v))):
                report.fail("closure-6 u*v in X12", (i, j))
                bad = True
                break
        if bad:
            break
    # groupoid: every morphism is convolution invertible
    for name, fam, ambient in (("Z1", z1, False), ("Omega", omega, True),
                               ("X22", x22, False), ("X12", x12, True)):
        for i, m in enumerate(fam):
            mat = m if ambient else emb(m)
            try:
                convcat.convolution_inverse_matrix(ca, mat, "C")
            except Exception:
                report.fail(f"{name}-morphism-not-invertible", (i,))
                break
    return report


# -- Proposition 5.7 ---------------------------------------------------------


class Prop57Report:
    def __init__(self):
        self.failures = []
        self.h1_count = None
        self.omega_bar_count = None

    def fail(self, what, witness=None):
        self.failures.append((what, witness))

    @property
    def passed(self):
        return not self.failures


def prop57_check(ca, t0=None, seed=0, enumerate_cap=EXHAUSTIVE_CAP):
    """F(v) = v * t0 is a bijection Z^1 -> Omega_A preserving/reflecting ~."""
    b = ca.coinvariants()
    _gate(ca.hopf, b.algebra)
    f = ca.field
    hopf = ca.hopf
    report = Prop57Report()
    omega = omega_enumerate(ca, seed=seed, enumerate_cap=enumerate_cap)
    if t0 is None:
        if not omega:
            report.fail("Omega-empty-no-base-point")
            return report
        t0 = omega[0]
    if not omega_membership(ca, t0):
        report.fail("t0-not-in-Omega")
        return report
    u0 = t0 @ hopf.antipode
    datum = cleft.CleftingDatum(
        convcat.HomSpaceElement(t0, (2, 1), "C"),
        convcat.HomSpaceElement(u0, (1, 2), "C"), normalized=True)
    act = action_from_cleft(ca, datum)
    z1 = z1_enumerate(act, enumerate_cap=enumerate_cap)

    def F(v):
        return convcat.convolve_matrices(ca, _embed_v(ca, b, v), t0, "C")

    def F_inv(t):
        m = convcat.convolve_matrices(ca, t, u0, "C")
        cols = [b.from_ambient(m.col(h)) for h in range(hopf.dim)]
        return Matrix.from_cols(f, cols, nrows=b.dim)

    for i, v in enumerate(z1):
        t = F(v)
        if not omega_membership(ca, t):
            report.fail("F-image-not-in-Omega", (i,))
            continue
        if F_inv(t) != v:
            report.fail("Finv-F-not-id", (i,))
    for i, t in enumerate(omega):
        v = F_inv(t)
        if not z1_membership(act, v):
            report.fail("Finv-image-not-in-Z1", (i,))
            continue
        if F(v) != t:
            report.fail("F-Finv-not-id", (i,))
    if len(z1) != len(omega):
        report.fail("not-bijective", (len(z1), len(omega)))
    # ~ preserved and reflected, pairwise
    for i in range(len(z1)):
        for j in range(len(z1)):
            lhs = cohomologous(act, z1[i], z1[j], seed=seed)
            rhs = omega_equivalence(ca, F(z1[i]), F(z1[j]), seed=seed)
            if lhs != rhs:
                report.fail("equivalence-not-transported", (i, j))
    report.h1_count = len(h1_classes(act, z1, seed=seed))
    report.omega_bar_count = len(omega_classes(ca, omega, seed=seed))
    if report.h1_count != report.omega_bar_count:
        report.fail("class-count-mismatch",
                    (report.h1_count, report.omega_bar_count))
    return report

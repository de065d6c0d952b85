"""The Militaru-Stefan lifting correspondence (§6): right-A-action candidates
phi on M versus colinear (algebra) maps t: H -> E, stability (Prop 6.1),
unitality (Prop 6.2), associativity (Prop 6.3), the lifting theorem (Thm 6.4),
and the classification Omega_E-bar = Lambda_M-bar = H^1(H, End_B(M)).

phi is a dm x dim(M (x)_B A) matrix in quotient coordinates; t lives in
E-coordinates as in module maintheorem.
"""

import itertools
import random

from . import cleft, cohomology, convcat, maintheorem
from .endomorphism import hom_A
from .hopf import is_cocommutative
from .linalg import Matrix, basis_vec, kron_vec, tensor_entries, vec_add, vec_scale

EXHAUSTIVE_CAP = 10 ** 6
QQ_COEFF_BOUND = 3


class SearchInconclusive(RuntimeError):
    pass


class NotLinear(ValueError):
    pass


class ActionCandidate:
    """B-linear phi: M (x)_B A -> M with derived action m.a = phi(pi(m (x) a))."""

    def __init__(self, ctx, phi):
        self.ctx = ctx
        self.phi = phi
        f = ctx.field
        for k in range(ctx.b.dim):
            if phi @ ctx.x2_actions[k] != ctx.m.actions[k] @ phi:
                raise NotLinear(f"phi is not B-linear at b_{k}")

    def act_matrix(self, a_vec):
        """m -> m.a as a dm x dm matrix."""
        ctx = self.ctx
        f = ctx.field
        cols = []
        for mi in range(ctx.m.dim):
            x = ctx.quot.project(kron_vec(f, basis_vec(f, ctx.m.dim, mi), a_vec))
            cols.append(self.phi.apply(x))
        return Matrix.from_cols(f, cols, nrows=ctx.m.dim)


class LiftingPair:
    """phi together with t = alpha^_12(phi) and u' = t o Sbar."""

    def __init__(self, ctx, candidate, t_coords):
        self.ctx = ctx
        self.candidate = candidate
        self.t = t_coords                           # e.dim x dh
        self.u_prime = t_coords @ ctx.ca.hopf.antipode_inv
        self.u = t_coords @ ctx.ca.hopf.antipode


def _check_621(ctx, candidate, u_prime):
    """(6.2.1): m.a (x)_B 1 = u'(a_[1]) (m (x)_B a_[0])."""
    f = ctx.field
    da, dh = ctx.ca.algebra.dim, ctx.ca.hopf.dim
    for mi in range(ctx.m.dim):
        em = basis_vec(f, ctx.m.dim, mi)
        for aj in range(da):
            x = ctx.quot.project(kron_vec(f, em, basis_vec(f, da, aj)))
            lhs = ctx.eta.apply(candidate.phi.apply(x))
            rhs = [f.zero] * ctx.quot.dim
            rho_a = ctx.ca.coaction.apply(basis_vec(f, da, aj))
            for (a0, h), c in tensor_entries(f, rho_a, (da, dh)):
                p = ctx.quot.project(kron_vec(f, em, basis_vec(f, da, a0)))
                w = ctx.ev(u_prime, basis_vec(f, dh, h)).apply(p)
                rhs = vec_add(f, rhs, vec_scale(f, c, w))
            if lhs != rhs:
                return False, (mi, aj)
    return True, None


def _check_622(ctx, candidate, t_coords):
    """(6.2.2): t(h)(m (x) a) = Sum_i phi(m (x) l_i(h)) (x) r_i(h) a."""
    f = ctx.field
    da, dh = ctx.ca.algebra.dim, ctx.ca.hopf.dim
    for hj in range(dh):
        t_h = ctx.ev(t_coords, basis_vec(f, dh, hj))
        rep = ctx.tmap.rep(basis_vec(f, dh, hj))
        for mi in range(ctx.m.dim):
            em = basis_vec(f, ctx.m.dim, mi)
            for aj in range(da):
                x = ctx.quot.project(kron_vec(f, em, basis_vec(f, da, aj)))
                lhs = t_h.apply(x)
                rhs = [f.zero] * ctx.quot.dim
                for (l, r), c in tensor_entries(f, rep, (da, da)):
                    mv = candidate.phi.apply(ctx.quot.project(
                        kron_vec(f, em, basis_vec(f, da, l))))
                    av = ctx.ca.algebra.product(basis_vec(f, da, r),
                                                basis_vec(f, da, aj))
                    rhs = vec_add(f, rhs, vec_scale(
                        f, c, ctx.quot.project(kron_vec(f, mv, av))))
                if lhs != rhs:
                    return False, (hj, mi, aj)
    return True, None


def phi_to_t(ctx, phi):
    """Lift phi to t = alpha^_12(phi); verifies colinearity + (6.2.1)/(6.2.2)."""
    candidate = phi if isinstance(phi, ActionCandidate) else ActionCandidate(ctx, phi)
    t_coords = maintheorem.alpha12_hat(ctx, candidate.phi)
    if not convcat.membership(ctx.e.ca, t_coords, (2, 1), "C"):
        raise maintheorem.MembershipViolation("t = alpha^_12(phi) not colinear")
    pair = LiftingPair(ctx, candidate, t_coords)
    ok, w = _check_621(ctx, candidate, pair.u_prime)
    if not ok:
        raise maintheorem.MembershipViolation(f"(6.2.1) fails at {w}")
    ok, w = _check_622(ctx, candidate, t_coords)
    if not ok:
        raise maintheorem.MembershipViolation(f"(6.2.2) fails at {w}")
    return pair


def t_to_phi(ctx, t_coords):
    """Inverse lift: phi = beta~_12(t o Sbar), per (6.2.1)."""
    phi = maintheorem.beta12_tilde(ctx, t_coords @ ctx.ca.hopf.antipode_inv)
    return ActionCandidate(ctx, phi)


class EquivalenceVerdict:
    def __init__(self, flags, names):
        self.flags = tuple(flags)
        self.names = tuple(names)

    @property
    def equivalent(self):
        return len(set(self.flags)) == 1

    @property
    def all_true(self):
        return all(self.flags)

    def __repr__(self):
        body = ", ".join(f"{n}={v}" for n, v in zip(self.names, self.flags))
        return f"EquivalenceVerdict({body})"


def check_unitality(pair):
    """Prop 6.2: t(1)=1, u'(1)=1, m.1=m (the paper's 'm.1=1' is a typo)."""
    ctx = pair.ctx
    one_h = ctx.ca.hopf.algebra.unit
    unit_e = ctx.e.ca.algebra.unit
    c1 = pair.t.apply(one_h) == unit_e
    c2 = pair.u_prime.apply(one_h) == unit_e
    c3 = pair.candidate.phi @ ctx.eta == Matrix.identity(ctx.field, ctx.m.dim)
    return EquivalenceVerdict((c1, c2, c3), ("t(1)=1", "u'(1)=1", "m.1=m"))


def check_associativity(pair):
    """Prop 6.3: t multiplicative, u anti-multiplicative, action associative."""
    ctx = pair.ctx
    f = ctx.field
    dh, da = ctx.ca.hopf.dim, ctx.ca.algebra.dim
    e_alg = ctx.e.ca.algebra
    eh = [basis_vec(f, dh, i) for i in range(dh)]
    c1 = True
    for i in range(dh):
        for j in range(dh):
            hk = ctx.ca.hopf.algebra.product(eh[i], eh[j])
            if pair.t.apply(hk) != e_alg.product(pair.t.apply(eh[i]),
                                                 pair.t.apply(eh[j])):
                c1 = False
                break
        if not c1:
            break
    c2 = True
    for i in range(dh):
        for j in range(dh):
            hk = ctx.ca.hopf.algebra.product(eh[i], eh[j])
            if pair.u.apply(hk) != e_alg.product(pair.u.apply(eh[j]),
                                                 pair.u.apply(eh[i])):
                c2 = False
                break
        if not c2:
            break
    c3 = True
    for i in range(da):
        acti = pair.candidate.act_matrix(basis_vec(f, da, i))
        for j in range(da):
            ab = ctx.ca.algebra.product(basis_vec(f, da, i),
                                        basis_vec(f, da, j))
            actj = pair.candidate.act_matrix(basis_vec(f, da, j))
            if actj @ acti != pair.candidate.act_matrix(ab):
                c3 = False
                break
        if not c3:
            break
    return EquivalenceVerdict(
        (c1, c2, c3),
        ("t multiplicative", "u anti-multiplicative", "action associative"))


def lifting_theorem_check(pair):
    """Thm 6.4: t algebra map <=> u anti-algebra map <=> phi gives an A-module
    extending the B-action (the statement's 'B-module' is a typo)."""
    unital = check_unitality(pair)
    assoc = check_associativity(pair)
    flags = tuple(u and a for u, a in zip(unital.flags, assoc.flags))
    return EquivalenceVerdict(
        flags, ("t algebra map", "u anti-algebra map", "A-module structure"))


# -- Proposition 6.1: stability ----------------------------------------------


class StabilityReport:
    def __init__(self):
        self.degenerate = False
        self.stable = None
        self.side_iso = None        # found intertwiner M (x) H -> M (x)_B A
        self.side_cleft = None      # clefting datum on E or NotFound
        self.witness = None
        self.detail = ""


def _invertible_in_matrix_span(field, mats, seed=0, tries=200,
                               enumerate_cap=EXHAUSTIVE_CAP):
    d = len(mats)
    if d == 0 or mats[0].rows != mats[0].cols:
        return None, True
    if field.kind == "Fp" and field.p ** d <= enumerate_cap:
        for coeffs in itertools.product(range(field.p), repeat=d):
            m = cleft._lin_comb(field, mats, coeffs)
            if m.is_invertible():
                return m, True
        return None, True
    candidates = [tuple(field.one if i == j else field.zero for i in range(d))
                  for j in range(d)]
    candidates.append((field.one,) * d)
    rng = random.Random(seed)
    for _ in range(tries):
        if field.kind == "Fp":
            candidates.append(tuple(rng.randrange(field.p) for _ in range(d)))
        else:
            candidates.append(tuple(
                field.from_int(rng.randint(-QQ_COEFF_BOUND, QQ_COEFF_BOUND))
                for _ in range(d)))
    for coeffs in candidates:
        m = cleft._lin_comb(field, mats, coeffs)
        if m.is_invertible():
            return m, True
    # nonzero span sampled without success: not a proof of absence
    return None, False


def stability_check(ca, m, seed=0, tries=200, enumerate_cap=EXHAUSTIVE_CAP):
    """Prop 6.1: M is H-stable iff E = END_A(M (x)_B A) is cleft."""
    report = StabilityReport()
    if m.dim == 0:
        report.degenerate = True
        report.detail = "M = 0: every statement of §6 is vacuous"
        return report
    ctx = maintheorem.TheoremContext(ca, m)
    f = ctx.field
    # side A: invertible element of Hom_B^H(M (x) H, M (x)_B A)
    basis = ctx.dm_hom_space(1, 2)
    iso = None
    conclusive_a = True
    if ctx.x1_dim != ctx.x2_dim:
        conclusive_a = True
    else:
        iso, conclusive_a = _invertible_in_matrix_span(
            f, basis, seed=seed, tries=tries, enumerate_cap=enumerate_cap)
    report.side_iso = iso
    # side B: find_cleft on E
    datum = cleft.find_cleft(ctx.e.ca, seed=seed, tries=tries,
                             enumerate_cap=enumerate_cap)
    cleft_found = not isinstance(datum, cleft.NotFound)
    conclusive_b = cleft_found or datum.exhaustive
    report.side_cleft = datum
    side_a = iso is not None
    if side_a != cleft_found:
        if not conclusive_a and cleft_found:
            raise SearchInconclusive("E is cleft but no intertwiner was "
                                     "found in the sampled span")
        if not conclusive_b and side_a:
            raise SearchInconclusive("intertwiner found but the clefting "
                                     "search on E was not exhaustive")
        report.stable = False
        report.detail = "sides disagree conclusively (Prop 6.1 violated)"
        return report
    report.stable = side_a
    if side_a and cleft_found:
        # transport witnesses through Lemma 3.5: u in C_E(1,2) gives the
        # intertwiner alpha_21(u) = beta21(u o Sbar), and back via beta21_bar
        w = maintheorem.alpha(ctx, (1, 2), datum.u.matrix)
        if not ctx.dm_membership(w, 1, 2):
            report.detail = "transported witness left Hom_B^H"
            report.stable = None
        elif not (w.rows == w.cols and w.is_invertible()):
            report.detail = "transported witness is not invertible"
        else:
            report.witness = w
        back = maintheorem.alpha_inverse(ctx, (1, 2), iso)
        if not convcat.membership(ctx.e.ca, back, (1, 2), "C"):
            report.detail += "; beta21_bar transport left C_E(1,2)"
            report.stable = None
    return report


# -- Proposition 6.5: classification -----------------------------------------


def _b_linear_space(ctx):
    """Basis of all B-linear maps M (x)_B A -> M."""
    f = ctx.field
    dm, dq = ctx.m.dim, ctx.quot.dim
    nunk = dm * dq
    cols = []
    for flat in range(nunk):
        probe = Matrix(f, dm, dq,
                       [f.one if t == flat else f.zero for t in range(nunk)])
        defect = []
        for k in range(ctx.b.dim):
            defect.extend((probe @ ctx.x2_actions[k]
                           - ctx.m.actions[k] @ probe).data)
        cols.append(defect)
    op = Matrix.from_cols(f, cols, nrows=len(cols[0]))
    return [Matrix(f, dm, dq, v) for v in op.kernel()]


def _is_action(ctx, phi):
    """phi in Lambda_M: unital + associative (the Thm 6.4 filter)."""
    try:
        cand = ActionCandidate(ctx, phi)
    except NotLinear:
        return False
    f = ctx.field
    if cand.phi @ ctx.eta != Matrix.identity(f, ctx.m.dim):
        return False
    da = ctx.ca.algebra.dim
    for i in range(da):
        acti = cand.act_matrix(basis_vec(f, da, i))
        for j in range(da):
            ab = ctx.ca.algebra.product(basis_vec(f, da, i),
                                        basis_vec(f, da, j))
            if cand.act_matrix(basis_vec(f, da, j)) @ acti \
                    != cand.act_matrix(ab):
                return False
    return True


def lambda_enumerate(ctx, seed=0, enumerate_cap=EXHAUSTIVE_CAP,
                     candidates=None):
    """All of Lambda_M: exhaustive over F_p within cap; over Q transported
    from Omega_E through the bijection alpha^_12 (Thm 6.4), or filtered from
    supplied candidates when Omega_E is not enumerable."""
    f = ctx.field
    if candidates is not None:
        return [phi for phi in candidates if _is_action(ctx, phi)]
    space = _b_linear_space(ctx)
    d = len(space)
    if f.kind == "Fp" and f.p ** d <= enumerate_cap:
        out = []
        for coeffs in itertools.product(range(f.p), repeat=d):
            phi = cleft._lin_comb(f, space, coeffs) if d else None
            if phi is not None and _is_action(ctx, phi):
                out.append(phi)
        return out
    omega = cohomology.omega_enumerate(ctx.e.ca, seed=seed,
                                       enumerate_cap=enumerate_cap)
    out = []
    for t in omega:
        phi = t_to_phi(ctx, t).phi
        if not _is_action(ctx, phi):
            raise maintheorem.MembershipViolation(
                "t in Omega_E but phi = t_to_phi(t) not an action (Thm 6.4)")
        if phi not in out:
            out.append(phi)
    return out


def _endb_conjugation_kernel(ctx, t1, t2):
    """Solutions f in End_B(M) of (6.5.1): t1(h)(f (x) A) = (f (x) A)t2(h)."""
    f = ctx.field
    dh = ctx.ca.hopf.dim
    endb = hom_A(f, ctx.m.actions, ctx.m.actions, ctx.m.dim, ctx.m.dim)
    if not endb:
        return [], endb
    gq = [ctx.quot.projection
          @ g.kron(Matrix.identity(f, ctx.ca.algebra.dim))
          @ ctx.quot.section for g in endb]
    cols = []
    for k, g in enumerate(gq):
        defect = []
        for h in range(dh):
            t1h = ctx.ev(t1, basis_vec(f, dh, h))
            t2h = ctx.ev(t2, basis_vec(f, dh, h))
            defect.extend((t1h @ g - g @ t2h).data)
        cols.append(defect)
    op = Matrix.from_cols(f, cols, nrows=len(cols[0]))
    sols = []
    for v in op.kernel():
        g = Matrix.zeros(f, ctx.m.dim, ctx.m.dim)
        for k, c in enumerate(v):
            if c != f.zero:
                g = g + endb[k].scale(c)
        sols.append(g)
    return sols, endb


def phi_equivalence(ctx, phi1, phi2, seed=0, enumerate_cap=EXHAUSTIVE_CAP):
    """phi1 ~ phi2: invertible f in End_B(M) with f(m.2 a) = f(m).1 a.

    Decided through (6.5.1) on t1, t2 and cross-checked against the direct
    module-isomorphism condition.
    """
    f = ctx.field
    t1 = maintheorem.alpha12_hat(ctx, phi1)
    t2 = maintheorem.alpha12_hat(ctx, phi2)
    sols, _ = _endb_conjugation_kernel(ctx, t1, t2)
    g, _ = _invertible_in_matrix_span(f, sols, seed=seed,
                                      enumerate_cap=enumerate_cap)
    via_651 = g is not None
    # independent check: f A-linear between the two induced module structures
    da = ctx.ca.algebra.dim
    c1 = ActionCandidate(ctx, phi1)
    c2 = ActionCandidate(ctx, phi2)
    nunk = ctx.m.dim ** 2
    cols = []
    for flat in range(nunk):
        probe = Matrix(f, ctx.m.dim, ctx.m.dim,
                       [f.one if t == flat else f.zero for t in range(nunk)])
        defect = []
        for i in range(da):
            a = basis_vec(f, da, i)
            defect.extend((probe @ c2.act_matrix(a)
                           - c1.act_matrix(a) @ probe).data)
        cols.append(defect)
    op = Matrix.from_cols(f, cols, nrows=len(cols[0]))
    direct_sols = [Matrix(f, ctx.m.dim, ctx.m.dim, v) for v in op.kernel()]
    g2, _ = _invertible_in_matrix_span(f, direct_sols, seed=seed,
                                       enumerate_cap=enumerate_cap)
    direct = g2 is not None
    if via_651 != direct:
        raise maintheorem.MembershipViolation(
            "(6.5.1) verdict disagrees with direct module isomorphism")
    return via_651


class ClassificationReport:
    def __init__(self):
        self.lambda_count = None
        self.lambda_classes = None
        self.omega_count = None
        self.omega_classes = None
        self.h1_count = None
        self.failures = []

    def fail(self, what, witness=None):
        self.failures.append((what, witness))

    @property
    def passed(self):
        return not self.failures


def classify_actions(ca, m, seed=0, enumerate_cap=EXHAUSTIVE_CAP,
                     candidates=None):
    """Prop 6.5 + final remark: |Lambda_M-bar| = |Omega_E-bar| (= |H^1|).

    When `candidates` is supplied (required over Q whenever Omega_E is not
    finitely enumerable), the classification runs on the supplied family and
    its alpha^_12 transport; completeness claims are then relative to it.
    """
    ctx = maintheorem.TheoremContext(ca, m)
    report = ClassificationReport()
    lams = lambda_enumerate(ctx, seed=seed, enumerate_cap=enumerate_cap,
                            candidates=candidates)
    report.lambda_count = len(lams)
    # round trips phi <-> t on everything enumerated
    ts = []
    for phi in lams:
        pair = phi_to_t(ctx, phi)
        verdict = lifting_theorem_check(pair)
        if not (verdict.equivalent and verdict.all_true):
            report.fail("lifting-theorem", verdict)
        if t_to_phi(ctx, pair.t).phi != phi:
            report.fail("round-trip-phi")
        ts.append(pair.t)
    for t in ts:
        if maintheorem.alpha12_hat(ctx, t_to_phi(ctx, t).phi) != t:
            report.fail("round-trip-t")
    if candidates is not None:
        omega = ts
    else:
        omega = cohomology.omega_enumerate(ctx.e.ca, seed=seed,
                                           enumerate_cap=enumerate_cap)
    report.omega_count = len(omega)
    if len(lams) != len(omega):
        report.fail("lambda-omega-count", (len(lams), len(omega)))
    # classes on both sides
    reps, classes = [], []
    for phi in lams:
        for idx, r in enumerate(reps):
            if phi_equivalence(ctx, phi, r, seed=seed,
                               enumerate_cap=enumerate_cap):
                classes[idx].append(phi)
                break
        else:
            reps.append(phi)
            classes.append([phi])
    report.lambda_classes = len(classes)
    report.omega_classes = len(cohomology.omega_classes(
        ctx.e.ca, omega, seed=seed))
    if report.lambda_classes != report.omega_classes:
        report.fail("class-count", (report.lambda_classes,
                                    report.omega_classes))
    # cohomological description when the §5 hypotheses hold
    endb = ctx.e.ca.coinvariants()
    if (omega and is_cocommutative(ca.hopf)
            and endb.algebra.is_commutative()):
        t0 = omega[0]
        datum = cleft.CleftingDatum(
            convcat.HomSpaceElement(t0, (2, 1), "C"),
            convcat.HomSpaceElement(t0 @ ca.hopf.antipode, (1, 2), "C"),
            normalized=True)
        act = cohomology.action_from_cleft(ctx.e.ca, datum)
        try:
            z1 = cohomology.z1_enumerate(act, enumerate_cap=enumerate_cap)
        except cohomology.SearchInconclusive:
            z1 = None       # |H^1| not computable; leave h1_count unset
        if z1 is not None:
            report.h1_count = len(cohomology.h1_classes(act, z1, seed=seed))
            if candidates is None and report.h1_count != report.lambda_classes:
                report.fail("h1-count",
                            (report.h1_count, report.lambda_classes))
    return report

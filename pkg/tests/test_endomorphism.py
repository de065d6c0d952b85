from hopfgalois.comodule import tensor_over_B
from hopfgalois.endomorphism import (build_E, build_F, end_A, verify_eq14,
                                     verify_F_iso)

from conftest import module_b, module_k


def _e(ca, m):
    return build_E(ca, tensor_over_B(m, ca))


def test_E_dims_m2_regular(m2_q):
    m = module_b(m2_q)
    e = _e(m2_q, m)
    # END_A(M (x)_B A) for M = B over graded M2: 4-dimensional
    assert e.dim == 4
    assert e.ca.validate().passed


def test_E_for_point_module(m2_f3):
    m = module_k(m2_f3)
    e = _e(m2_f3, m)
    # M (x)_B A = e11-row of M2, End_A of it is k
    assert e.dim == 1


def test_eq14_holds(m2_q, m2_f3, h4_q):
    for ca in (m2_q, h4_q):
        ok, witness = verify_eq14(_e(ca, module_b(ca)))
        assert ok, witness
    ok, witness = verify_eq14(_e(m2_f3, module_k(m2_f3)))
    assert ok, witness


def test_F_iso_endB(m2_q):
    m = module_b(m2_q)
    e = _e(m2_q, m)
    ident = build_F(m2_q, m, e)
    assert verify_F_iso(m2_q, m, ident)
    # F = E^{coH} is isomorphic to End_B(B) = B, dimension 2
    assert ident.embedding.dim == 2


def test_F_iso_h4(h4_q):
    m = module_b(h4_q)
    e = _e(h4_q, m)
    ident = build_F(h4_q, m, e)
    assert verify_F_iso(h4_q, m, ident)
    assert ident.embedding.dim == 1


def test_end_A_of_regular_is_full(m2_q):
    m = module_b(m2_q)
    ind = tensor_over_B(m, m2_q)
    basis = end_A(m2_q, ind.module)
    assert len(basis) == 4

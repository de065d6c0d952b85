import pytest

from hopfgalois.fields import QQ
from hopfgalois.galois import (NotGalois, canonical_map, canonical_map_prime,
                               phi_comparison, translation_map,
                               verify_translation_identities)
from hopfgalois.linalg import Matrix, basis_vec, kron_vec


def test_canonical_map_dims_m2(m2_q):
    can = canonical_map(m2_q)
    assert can.galois
    assert can.matrix.rows == 8 and can.matrix.cols == 8


def test_canonical_prime_equivalent(m2_q, h4_q):
    for ca in (m2_q, h4_q):
        can = canonical_map(ca)
        can_p = canonical_map_prime(ca, can.induced)
        assert can.galois == can_p.galois


def test_trivial_coaction_not_galois(kxk_q):
    can = canonical_map(kxk_q)
    assert not can.galois
    with pytest.raises(NotGalois):
        translation_map(kxk_q, can)


def test_phi_comparison_inverse(h4_q):
    phi, phi_inv = phi_comparison(h4_q)
    n = h4_q.algebra.dim * h4_q.hopf.dim
    assert phi @ phi_inv == Matrix.identity(QQ, n)
    assert phi_inv @ phi == Matrix.identity(QQ, n)


def test_translation_map_kc2_oracle(kc2_q):
    # hand oracle: gamma(1) = 1 (x) 1, gamma(g) = g (x) g (g^{-1} = g)
    tmap = translation_map(kc2_q)
    rep = tmap.rep(basis_vec(QQ, 2, 1))
    expected = kron_vec(QQ, basis_vec(QQ, 2, 1), basis_vec(QQ, 2, 1))
    assert rep == expected


def test_translation_identities_all_fixtures(kc2_q, h4_q, m2_q, cp_minus1):
    for ca in (kc2_q, h4_q, m2_q, cp_minus1):
        report = verify_translation_identities(ca)
        assert report.passed, report.failures


def test_translation_identities_f5(h4_f5):
    assert verify_translation_identities(h4_f5).passed


def test_identity_witness_on_corruption(h4_q):
    # corrupting gamma by scaling breaks (1.2.1) with a basis witness
    tmap = translation_map(h4_q)
    tmap.gamma = tmap.gamma.scale(QQ.from_int(2))
    tmap.representative = tmap.representative.scale(QQ.from_int(2))
    report = verify_translation_identities(h4_q, tmap)
    assert not report.passed
    names = {name for name, _ in report.failures}
    assert "1.2.1" in names or "1.2.3" in names

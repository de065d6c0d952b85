from hopfgalois import convcat, maintheorem

from conftest import module_b, module_k


def test_theorem31_m2_regular(m2_q):
    report = maintheorem.verify_theorem31(m2_q, module_b(m2_q))
    assert report.passed, report.failures
    for cls in convcat.CLASSES:
        assert report.details[f"dim C{cls}"] == report.details[f"dim D{cls}"]


def test_theorem31_m2_point(m2_q):
    report = maintheorem.verify_theorem31(m2_q, module_k(m2_q))
    assert report.passed, report.failures


def test_theorem31_h4_point(h4_q):
    report = maintheorem.verify_theorem31(h4_q, module_k(h4_q))
    assert report.passed, report.failures


def test_alpha_beta_individual(m2_q):
    ctx = maintheorem.TheoremContext(m2_q, module_b(m2_q))
    for cls in convcat.CLASSES:
        for el in convcat.hom_space(ctx.e.ca, cls, "C").elements:
            img = maintheorem.alpha(ctx, cls, el.matrix)
            assert ctx.dm_membership(img, *cls)
            back = maintheorem.alpha_inverse(ctx, cls, img)
            assert back == el.matrix


def test_negative_control_corrupt_gamma(h4_q):
    # omitting S-bar in gamma_12 must break pattern (12b) with a witness;
    # needs a fixture with S-bar != id, hence H4
    report = maintheorem.verify_theorem31(h4_q, module_b(h4_q),
                                          corrupt_gamma=True)
    assert not report.passed
    failed = {name for name, _ in report.failures}
    assert "12b" in failed
    witness = dict(report.failures)["12b"]
    assert witness is not None


def test_corrupt_gamma_harmless_when_antipode_trivial(kc2_q):
    # on kC2 the antipode is the identity, so the corruption is a no-op
    report = maintheorem.verify_theorem31(kc2_q, module_b(kc2_q),
                                          corrupt_gamma=True)
    assert report.passed


def test_pattern_labels_cover_eight():
    assert len(maintheorem.PATTERN_LABELS) == 8
    assert maintheorem.PATTERN_LABELS[(2, 1, 1)] == "12b"
    assert maintheorem.PATTERN_LABELS[(1, 1, 2)] == "21a"

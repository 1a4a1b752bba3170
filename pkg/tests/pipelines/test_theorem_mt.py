import pytest

from cycleops import CycleOpsInvalidParameters, CycleOpsUnsupported, __version__
from cycleops.models.certificate import Certificate, CertificateKind, SweepFailure
from cycleops.pipelines import certify_theorem_mt, dump_model, first_admissible_m, verify_certificate


def test_genus_one_fixture(genus_one_q):
    cert = certify_theorem_mt(1, 3)
    assert isinstance(cert, Certificate)
    assert cert.kind is CertificateKind.THEOREM_MT
    assert cert.m == 5
    assert tuple(cert.q) == genus_one_q
    assert cert.kappa == 1
    assert cert.projected_coeffs == [1, -1, 1]
    assert cert.exponents == [1, 2]
    assert [(c.label, c.residual, c.passed) for c in cert.checks] == [("S2:e=1", 0, True), ("S1:e=2", 0, True)]
    assert cert.tool_version == __version__
    assert verify_certificate(cert).passed


def test_genus_two():
    cert = certify_theorem_mt(2, 3)
    assert isinstance(cert, Certificate)
    assert cert.m == 7
    assert cert.kappa != 0
    assert verify_certificate(cert).passed


def test_sweep_is_gapless_and_starts_at_the_bound():
    for g in range(1, 5):
        for n in range(3, 8):
            cert = certify_theorem_mt(g, n)
            assert isinstance(cert, Certificate)
            assert cert.m == first_admissible_m(g, n)
            assert cert.projected_coeffs[-1] == 1
            assert verify_certificate(cert).passed


def test_small_n_is_unsupported():
    with pytest.raises(CycleOpsUnsupported):
        certify_theorem_mt(1, 2)


def test_m_override():
    cert = certify_theorem_mt(1, 3, m_override=8)
    assert isinstance(cert, Certificate)
    assert cert.m == 8
    assert verify_certificate(cert).passed
    with pytest.raises(CycleOpsInvalidParameters):
        certify_theorem_mt(1, 3, m_override=4)


def test_exhausted_sweep_is_a_value():
    result = certify_theorem_mt(3, 3, m_max=8)
    assert isinstance(result, SweepFailure)
    assert (result.m_min, result.m_max) == (9, 8)


def test_deterministic_and_worker_independent():
    sequential = dump_model(certify_theorem_mt(2, 4))
    assert dump_model(certify_theorem_mt(2, 4)) == sequential
    assert dump_model(certify_theorem_mt(2, 4, workers=2)) == sequential

import pytest

from cycleops import CycleOpsInvalidParameters
from cycleops.linear import ExponentConvention
from cycleops.models.certificate import Certificate, CertificateKind, SweepFailure
from cycleops.pipelines import certify_prop_p7, verify_certificate


def test_component_certificate():
    cert = certify_prop_p7(5, 5, 1, m_max=200)
    assert isinstance(cert, Certificate)
    assert cert.kind is CertificateKind.PROP_P7
    assert cert.i == 1
    assert cert.exponents == [2, 3]
    assert [c.label for c in cert.checks] == ["P7:e=2", "P7:e=3"]
    assert all(c.residual == 0 and c.passed for c in cert.checks)
    assert cert.functional_value != 0
    assert cert.m == 6
    assert verify_certificate(cert).passed


def test_empty_row_set():
    cert = certify_prop_p7(3, 4, 1, m_max=10)
    assert isinstance(cert, Certificate)
    assert cert.exponents == []
    assert cert.m == 5
    assert cert.q == [1, 0, 0, 0, 0]
    assert cert.functional_value == 4
    assert verify_certificate(cert).passed


def test_beauville_convention():
    cert = certify_prop_p7(4, 5, 1, m_max=60, convention=ExponentConvention.BEAUVILLE)
    assert isinstance(cert, Certificate)
    assert cert.exponents == [1, 2, 4]
    assert verify_certificate(cert).passed


def test_exhausted_sweep():
    result = certify_prop_p7(10, 3, 1, m_max=4)
    assert isinstance(result, SweepFailure)
    assert result.i == 1
    assert (result.m_min, result.m_max) == (4, 4)


@pytest.mark.parametrize("g, n, i, m_max", [(2, 3, 0, 10), (5, 10, 1, 10), (5, 3, -1, 10)])
def test_preconditions(g, n, i, m_max):
    with pytest.raises(CycleOpsInvalidParameters):
        certify_prop_p7(g, n, i, m_max=m_max)

import pytest

from knottunnels.verify import verify


def test_trivial_report():
    rep = verify(1, 3)
    assert rep.ok
    assert rep.strings == 2 and rep.pairs == 1


def test_small_report_counts():
    rep = verify(4, 10)
    assert rep.ok
    assert rep.checks["oracle-equivalence"].cases == 30
    assert all(c.cases > 0 for c in rep.checks.values())


def test_full_report():
    rep = verify(14, 200)
    assert rep.summary() == "0 mismatches over 32766 strings; 0 violations over all coprime pairs"


def test_rejects_bad_limits():
    with pytest.raises(ValueError):
        verify(0, 10)

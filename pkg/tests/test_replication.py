import pytest

from loopcalc.replication import CASES, CATALOG, UnknownCase, run_replication


@pytest.mark.parametrize("case_id", sorted(CASES))
def test_case_passes(case_id):
    (result,) = run_replication([case_id])
    assert result.passed, result.failures
    assert result.n_checks > 0


def test_catalog_shape():
    ids = [c.case_id for c in CATALOG]
    assert len(ids) == len(set(ids))
    assert {"tripleloop5-sq4", "zeta-susp", "singleloop-chain", "doubleloop2-j2"} <= set(ids)
    assert all(c.kind in ("published", "derived") for c in CATALOG)


def test_results_sorted_and_unknown_rejected():
    results = run_replication(["zeta-susp", "rho-values"])
    assert [r.case_id for r in results] == ["rho-values", "zeta-susp"]
    with pytest.raises(UnknownCase):
        run_replication(["nope"])

import pytest

from hesscoh.config.settings import SETTINGS
from hesscoh.core.pipeline import LargeRunError, VerificationPipeline, estimate_budget
from hesscoh.localization.hessenberg import HessenbergFunction
from hesscoh.presentation.certificates import verify_vanishing


def test_threaded_vanishing_matches_sequential(h3344):
    threaded = VerificationPipeline(max_workers=4).vanishing(h3344)
    assert threaded.model_dump() == verify_vanishing(h3344).model_dump()
    assert threaded.passed


def test_verify_all_n3():
    report = VerificationPipeline(max_workers=1).verify_all(3)
    assert report.count == 5
    assert report.passed
    assert [c.h for c in report.certificates][0] == [1, 2, 3]


def test_verify_all_thread_count_does_not_change_result():
    sequential = VerificationPipeline(max_workers=1).verify_all(4)
    threaded = VerificationPipeline(max_workers=4).verify_all(4)
    assert sequential.count == 14
    assert sequential.passed
    assert threaded.model_dump() == sequential.model_dump()


def test_certify_single(h3344):
    certificate = VerificationPipeline(max_workers=2).certify(h3344)
    assert certificate.passed
    assert certificate.vanishing.checks == 48


def test_large_run_needs_opt_in(monkeypatch):
    monkeypatch.setattr(SETTINGS, "verify_all_max_n", 2)
    pipeline = VerificationPipeline(max_workers=1)
    with pytest.raises(LargeRunError):
        pipeline.verify_all(3)
    assert pipeline.verify_all(3, allow_large=True).passed


def test_verify_all_rejects_zero():
    with pytest.raises(ValueError):
        VerificationPipeline().verify_all(0)


def test_default_workers_from_settings(monkeypatch):
    monkeypatch.setattr(SETTINGS, "threads", 3)
    assert VerificationPipeline().max_workers == 3
    assert VerificationPipeline(max_workers=0).max_workers == 1
    assert HessenbergFunction.point(2).values == (1, 2)


def test_budget_n3():
    budget = estimate_budget(3)
    assert budget.hessenberg_functions == 5
    assert budget.fixed_points == 15
    assert budget.vanishing_checks == 45
    assert budget.top_degree == 6 + SETTINGS.regularity_extra_degrees


@pytest.mark.parametrize("n", [3, 4])
def test_budget_matches_report(n):
    report = VerificationPipeline(max_workers=2).verify_all(n)
    budget = report.budget
    assert budget == estimate_budget(n)
    assert budget.hessenberg_functions == report.count
    assert budget.fixed_points == sum(c.fixed_point_count for c in report.certificates)
    assert budget.vanishing_checks == sum(c.vanishing.checks for c in report.certificates)

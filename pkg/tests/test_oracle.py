import pytest

from src.oracle.checks import (
    central_suite, characters_suite, hopf_suite, passed, quotient_suite, run_checks,
    subalgebra_suite,
)


def all_true(report):
    return all(v for v in report.values() if isinstance(v, bool))


@pytest.mark.parametrize("ell", [3, 5])
def test_characters(ell):
    assert all_true(characters_suite(ell))


@pytest.mark.parametrize("ell", [3, 5])
def test_dz_characters_are_central(ell):
    report = central_suite(ell)
    assert set(report) == {"central_torus", "central_borel+", "central_borel-", "central_full"}
    assert all_true(report)


@pytest.mark.parametrize("ell", [3, 5])
def test_quotient_dimensions(ell):
    report = quotient_suite(ell)
    assert report["quotient_dim_matches_dim_H"]
    assert report["quotient_shapes"] == 5


def test_triples_give_hopf_subalgebras():
    assert subalgebra_suite(3) == {"triples_are_hopf_subalgebras": True, "proper_torus_rejected": True}


def test_sampled_hopf_axioms():
    report = hopf_suite(5, samples=200, seed=7)
    assert all_true(report)


@pytest.mark.slow
def test_sampled_hopf_axioms_configured_sample():
    # random_samples and seed from config/qsub.yml
    assert all_true(hopf_suite(5))


@pytest.mark.slow
def test_exhaustive_hopf_axioms():
    report = hopf_suite(3)
    assert report == {
        "associativity": True, "coassociativity": True, "counit": True,
        "antipode": True, "bialgebra": True,
    }


@pytest.mark.slow
def test_run_all_checks():
    assert passed(run_checks(3))


def test_run_single_check():
    report = run_checks(3, "quotient")
    assert list(report) == ["quotient"]
    assert passed(report)

import pytest
from pydantic import ValidationError

from src.algebra.abelian import FinAbGroup
from src.errors import DomainError
from src.lie.rootsys import build
from src.pipeline.schemas import load_datum, load_family
from src.subgroups.census import enumerate_data
from src.subgroups.datum import full_datum, make_datum


def test_round_trip_of_enumerated_data():
    for D in enumerate_data(build("A", 1), 3, [FinAbGroup(()), FinAbGroup((3,))]):
        assert load_datum(D.to_json()) == D


def test_round_trip_with_root_lengths():
    D = make_datum(build("B", 2), 5, (), (), N=[(1, 1)], Gamma=FinAbGroup((5,)),
                   sigma=[(1,), (0,)], delta=[[3]])
    assert load_datum(D.to_json()) == D


def test_minimal_document():
    D = load_datum({"type": "A", "rank": 1, "ell": 3, "Iplus": [1], "Iminus": [1]})
    assert D == full_datum(build("A", 1), 3)


def test_delta_relative_to_given_generators():
    doc = {"type": "A", "rank": 1, "ell": 3, "N": {"gens": [[2]]},
           "Gamma": {"factors": [3]}, "sigma": [[1]], "delta": {"matrix": [[1]]}}
    D = load_datum(doc)
    # the canonical generator is 1 = 2 * 2, so it maps to 2
    assert D.delta.matrix == [[2]]
    assert D.to_json()["N"] == {"gens": [[1]]}


def test_inconsistent_delta():
    doc = {"type": "A", "rank": 1, "ell": 3, "N": {"gens": [[1], [2]]},
           "Gamma": {"factors": [3]}, "sigma": [[1]], "delta": {"matrix": [[1, 1]]}}
    with pytest.raises(DomainError):
        load_datum(doc)
    doc["delta"] = {"matrix": [[1]]}
    with pytest.raises(DomainError):
        load_datum(doc)


@pytest.mark.parametrize("doc", [
    {"rank": 1, "ell": 3},
    {"type": "A", "rank": 0, "ell": 3},
    {"type": "A", "rank": 1, "ell": 3, "v": 2},
    {"type": "A", "rank": 1, "ell": 3, "colour": "red"},
    {"type": "A", "rank": 1, "ell": "three"},
])
def test_malformed_documents(doc):
    with pytest.raises(ValidationError):
        load_datum(doc)


def test_family_accepts_bare_list():
    doc = {"type": "A", "rank": 1, "ell": 3}
    assert len(load_family([doc, doc])) == 2
    assert len(load_family({"v": 1, "data": [doc]})) == 1


@pytest.mark.parametrize("N,factors,sigma,matrix", [
    ([], [3], [[1]], [[1]]),
    ([[1]], [], [[]], [[1]]),
    ([[1]], [], [[]], [[]]),
])
def test_delta_entries_without_room_are_rejected(N, factors, sigma, matrix):
    doc = {"type": "A", "rank": 1, "ell": 3, "Iplus": [], "Iminus": [], "N": {"gens": N},
           "Gamma": {"factors": factors}, "sigma": sigma, "delta": {"matrix": matrix}}
    with pytest.raises(DomainError):
        load_datum(doc)


def test_empty_delta_rows_are_accepted():
    doc = {"type": "A", "rank": 1, "ell": 3, "Gamma": {"factors": [3]}, "sigma": [[1]],
           "delta": {"matrix": [[]]}}
    D = load_datum(doc)
    assert D.to_json()["delta"] == {"matrix": []}

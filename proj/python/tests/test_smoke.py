import json

import pytest
from hypothesis import given, settings, strategies as st

import partial_hopf as ph


def test_taft_basics():
    t = ph.algebra("taft", 3)
    assert t.dim == 9
    assert t.name == "taft(3)"
    assert "g^2x" in t.basis
    assert ph.validate(t)["ok"]


def test_bad_order_raises():
    with pytest.raises(ph.Error):
        ph.algebra("taft", 1)
    with pytest.raises(ValueError):
        ph.algebra("banana", 3)


def test_sweedler_family_values():
    fams = {f["name"]: f for f in ph.known_actions(ph.algebra("taft", 2))}
    lam = fams["lambda_alpha"]
    assert lam["params"] == ["alpha"]
    assert lam["values"] == {"1": "1", "x": "alpha", "gx": "alpha"}
    assert lam["partial"]["ok"] and lam["symmetric"]["ok"]


def test_coactions_verify():
    for f in ph.known_coactions(ph.algebra("nichols", 3)):
        assert f["partial"]["ok"], f["name"]
        assert f["symmetric"]["ok"], f["name"]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_classification_count(n):
    sol = ph.classify(ph.algebra("taft", n))
    assert sol["exhaustive"]
    assert len(sol["families"]) == ph.family_count(n)


def test_q_binomial_vanishes_at_root_of_unity():
    assert ph.q_binomial(2, 1) == "1+q"
    for k in range(1, 5):
        assert ph.q_binomial(5, k, order=5) == "0"


@settings(max_examples=40, deadline=None)
@given(i=st.integers(0, 4), t=st.integers(0, 4), k=st.integers(0, 4), order=st.sampled_from([0, 2, 3, 5, 8]))
def test_alternating_sum_identity(i, t, k, order):
    assert ph.check_identity("alternating_sum", [i, t, k], order)


def test_duality():
    d = ph.duality_check(4)
    assert d["psi_algebra"]["ok"] and d["psi_coalgebra"]["ok"]
    assert d["inverse"] and d["transport_matches"]


def test_json_round_trip():
    t = ph.algebra("taft", 3)
    text = ph.to_json(t)
    assert json.loads(text)["dim"] == 9
    back = ph.from_json(text)
    assert ph.to_json(back) == text
    assert ph.validate(back)["ok"]


def test_reference_tables():
    for kind, n in [("taft", 3), ("taft", 4), ("nichols", 3)]:
        assert ph.reference_mismatches(ph.algebra(kind, n)) == []

from fractions import Fraction

from latsimplex.verify import VerifyConfig, verify_all


def test_default_passes():
    rep = verify_all()
    assert rep.status == "pass", [c for c in rep.checks if c.status != "pass"]
    assert not rep.incomplete and rep.checks_run > 0


def test_d3_config_passes():
    assert verify_all(VerifyConfig(max_dim=3, seed=5, corpus_size=60)).status == "pass"


def test_corrupted_oracle_fails_with_witness():
    bad = VerifyConfig(max_dim=3, corpus_size=5,
                       grid_oracle=lambda d, n: Fraction(1, 2))
    rep = verify_all(bad)
    assert rep.status == "fail"
    (c,) = [c for c in rep.checks if c.status == "fail"]
    assert c.name == "tau-exact-and-grid" and c.witness["grid"] == "1/2"


def test_empty_corpus():
    rep = verify_all(VerifyConfig(max_dim=0))
    assert rep.status == "pass" and rep.note == "no checks run"


def test_budget_marks_incomplete():
    rep = verify_all(VerifyConfig(budget=50))
    assert rep.incomplete and rep.checks_run == 50


def test_deterministic():
    cfg = VerifyConfig(max_dim=2, corpus_size=20, seed=3)
    assert verify_all(cfg).dumps() == verify_all(cfg).dumps()

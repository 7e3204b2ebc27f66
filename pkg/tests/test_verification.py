import json

import pytest

from chw.verification import (
    SUITES,
    SuiteReport,
    fr_eps_family,
    perm_sample,
    reports_to_json,
    run_all,
    run_suite,
)


@pytest.mark.parametrize("n", [3, 4])
def test_all_suites_pass(n):
    for rep in run_all(n, seed=0):
        assert rep.ok, [(c.name, c.instance, c.detail) for c in rep.failures()]
        assert rep.passed > 0


@pytest.mark.parametrize("suite", ["autw", "monoid", "outg"])
def test_suites_pass_at_n5(suite):
    rep = run_suite(suite, 5, seed=1)
    assert rep.ok, rep.failures()


def test_monoid_suite_runs_at_n2():
    assert run_suite("monoid", 2).ok


@pytest.mark.parametrize("suite", SUITES)
def test_every_suite_has_a_rejected_negative_control(suite):
    rep = run_suite(suite, 3)
    controls = [c for c in rep.checks if c.name.startswith("negative control")]
    assert controls
    assert all(c.passed for c in controls)


def test_negative_control_flags_accepted_mutations():
    rep = SuiteReport("demo", 3, 0)
    assert rep.check("negative control: x", "", holds=False, expect=False)
    assert not rep.check("negative control: y", "", holds=True, expect=False)
    assert rep.failed == 1
    assert rep.failures()[0].detail == "mutated relation was accepted"
    with pytest.raises(ValueError):
        rep.check("negative control: x", "", holds=False, expect=False)


def test_determinism():
    a = reports_to_json(run_all(3, seed=0))
    b = reports_to_json(run_all(3, seed=0))
    assert a == b
    data = json.loads(a)
    assert [r["suite"] for r in data] == list(SUITES)
    assert set(data[0]["checks"][0]) == {"name", "instance", "pass", "detail"}


def test_seed_changes_samples():
    a = reports_to_json([run_suite("monoid", 3, seed=0)])
    b = reports_to_json([run_suite("monoid", 3, seed=1)])
    assert a != b


def test_range_errors():
    with pytest.raises(ValueError):
        run_all(2)
    with pytest.raises(ValueError):
        run_suite("nope", 3)


def test_perm_sample():
    assert len(perm_sample(3)) == 6
    assert len(perm_sample(4)) == 24
    s5 = perm_sample(5)
    assert (1, 2, 3, 4, 5) in s5 and (2, 3, 4, 5, 1) in s5


def test_fr_eps_family_patterns():
    assert fr_eps_family(1, 2, 3, 1) == "inverse"
    assert fr_eps_family(1, 2, 2, 3) == "twisted"
    assert fr_eps_family(1, 2, 1, 3) == "inverse"
    assert fr_eps_family(1, 2, 1, 2) == "commute"
    assert fr_eps_family(1, 2, 3, 4) == "commute"

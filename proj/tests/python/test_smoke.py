import pytest

import hopfpartial as hp


def test_scenarios_listed():
    assert set(hp.scenario_names()) == {"klein4", "smoke_z2", "induced_functions", "group_dictionary"}


def test_smoke_passes():
    report = hp.verify("smoke_z2")
    assert report["status"] == "pass"
    assert report["first_failure"] is None
    assert report["summary"]["failed"] == 0
    ids = [c["id"] for c in report["checks"]]
    assert len(ids) == len(set(ids))


def test_mutation_hits_expected_check():
    report = hp.verify("smoke_z2", mutate="omega:negate:0", fail_fast=True)
    assert report["status"] == "fail"
    assert report["first_failure"] == "cocycle.normalization"


def test_config_override():
    report = hp.verify("smoke_z2", associativity="sampled", sample_count=25, seed=3)
    assert report["config"]["sample_count"] == 25
    sampled = next(c for c in report["checks"] if c["id"] == "associativity.sampled")
    assert sampled["evaluated"] == 25


def test_bad_config_raises():
    with pytest.raises(hp.HopfPartialError):
        hp.verify("smoke_z2", n=3)
    with pytest.raises(hp.HopfPartialError):
        hp.default_config("nope")


def test_table():
    t = hp.table("smoke_z2", "omega")
    assert t


def test_catalogue():
    cat = hp.mutation_catalogue()
    assert len(cat) == 12
    for entry in cat:
        target = entry["mutation"].split(":")[0]
        assert target in hp.mutation_targets(entry["scenario"])


def test_cli_exit_codes():
    code, out, _ = hp.run_cli(["verify", "smoke_z2", "--verbosity", "0"])
    assert code == 0 and '"status": "pass"' in out
    code, _, err = hp.run_cli(["verify", "nope"])
    assert code == 2 and "unknown scenario" in err
    code, _, _ = hp.run_cli(["verify", "smoke_z2", "--mutate", "action:negate:0", "--fail-fast"])
    assert code == 1


def test_deterministic_across_jobs():
    assert hp.verify("smoke_z2", jobs=1) == hp.verify("smoke_z2", jobs=3)

import json

import pytest
from click.testing import CliRunner

from octlie.cli import canonical_json, main, payload_hash


def run(*args):
    return CliRunner().invoke(main, list(args))


def report(*args):
    out = run(*args)
    return out.exit_code, json.loads(out.output)


def test_theta_param():
    code, r = report("theta-param", "--x", "5", "--y", "1")
    assert code == 0
    assert r["payload"]["hc_param"] == [3, 2, -5]
    assert r["payload"]["lambda"] == [2, 1, 1, 0]
    assert r["payload_sha256"] == payload_hash(r["payload"])


def test_branch():
    code, r = report("branch", "--lambda", "1,1,0")
    assert code == 0
    assert sorted(t["k_type"] for t in r["payload"]["u3_types"]) == [[0, -1, -1], [1, 0, -1], [1, 1, 0]]
    assert r["payload"]["dim"] == 14
    assert r["payload"]["sl2cubed_trivial_multiplicity"] == 2


def test_output_is_deterministic():
    a, b = run("packets", "--group", "sp6", "--weight", "2,1,1"), run("packets", "--group", "sp6", "--weight", "2,1,1")
    ra, rb = json.loads(a.output), json.loads(b.output)
    assert ra["payload_sha256"] == rb["payload_sha256"]
    assert canonical_json(ra["payload"]) == canonical_json(rb["payload"])
    assert "timing_s" not in ra["payload"]


@pytest.mark.parametrize("args", [
    ["theta-param", "--x", "5"],
    ["orbits", "--D", "0"],
    ["orbits", "--D", "1/0"],
    ["char-match", "--D", "abc"],
    ["branch", "--lambda", "1,1"],
    ["branch", "--lambda", "0,1,0"],
    ["cubic", "--form", "1,2,3"],
    ["packets", "--group", "so5", "--weight", "0,0,0"],
    ["packets", "--group", "pgsp6", "--weight", "1,0,0"],
    ["lfactor", "--u1", "2"],
    ["lfactor", "--symbolic", "--ell", "1"],
    ["invariants", "--lambda", "2,1,1", "--mu", "0"],
    ["verify-all", "--only", "12"],
    ["no-such-command"],
    ["theta-param", "--x", "5", "--y", "1", "--bogus"],
])
def test_usage_errors_exit_2(args):
    assert run(*args).exit_code == 2


def test_orbits():
    code, r = report("orbits", "--D", "1")
    assert code == 0
    assert [x["stabilizer_dim"] for x in r["payload"]["representatives"]] == [8, 5, 5, 3]
    code, r = report("orbits", "--D", "sym")
    assert code == 0 and not r["payload"]["split"]


def test_char_match():
    code, r = report("char-match", "--D", "1")
    assert code == 0 and r["payload"]["g"] is not None
    code, r = report("char-match", "--D", "sym")
    assert code == 0 and r["payload"]["matches_target"]


def test_cubic():
    code, r = report("cubic", "--form", "0,1,-1,0")
    assert code == 0
    assert r["payload"]["discriminant"] == "1"
    assert r["payload"]["etale"]


def test_packets_g2():
    code, r = report("packets", "--group", "g2", "--weight", "0,0")
    assert code == 0 and len(r["payload"]["packet"]) == 3


def test_invariants():
    code, r = report("invariants", "--lambda", "2,1,1")
    assert code == 0 and r["payload"]["projections_form_basis"]


def test_lfactor():
    code, r = report("lfactor", "--symbolic")
    assert code == 0 and r["payload"]["factorization_ok"]
    code, r = report("lfactor", "--u1", "2", "--u2", "3", "--ell", "3")
    assert code == 0
    assert set(r["payload"]) == {"std_eigs", "spin_eigs", "spin_factor", "std_factor", "zeta_factor", "factorization_ok", "hecke_poly"}


def test_failed_check_exits_1():
    code, r = report("verify-all", "--only", "2")
    assert code == 1 and not r["ok"]
    assert r["payload"]["summary"] == {"2": "fail"}


def test_verify_all_subset_passes():
    code, r = report("verify-all", "--only", "3,4,8", "--jobs", "2")
    assert code == 0
    assert r["payload"]["summary"] == {"3": "pass", "4": "pass", "8": "pass"}
    for suite in r["payload"]["suites"]:
        assert all(c["anchor"] for c in suite["checks"])


def test_csv_output():
    out = run("--csv", "branch", "--lambda", "2,1,1")
    assert out.exit_code == 0
    lines = out.output.strip().splitlines()
    assert lines[0] == "k_type,multiplicity,dim"
    assert len(lines) == 10


def test_csv_falls_back_to_json_without_rows():
    out = run("--csv", "theta-param", "--x", "3", "--y", "1")
    assert json.loads(out.output)["payload"]["lambda"] == [0, 0, 0, 0]

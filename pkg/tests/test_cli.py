import json
import pathlib
import subprocess
import sys

import pytest

from hypertree_lab.cli import run_command

from golden_cases import CASES

TESTS_DIR = pathlib.Path(__file__).resolve().parent
EXPECTED = TESTS_DIR / "golden" / "expected"


def run_cli(argv):
    return subprocess.run(
        [sys.executable, "-m", "hypertree_lab.cli", *argv],
        cwd=TESTS_DIR,
        capture_output=True,
    )


def expected_bytes(name, stream):
    path = EXPECTED / f"{name}.{stream}"
    return path.read_bytes() if path.exists() else b""


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code):
    proc = run_cli(argv)
    assert proc.returncode == code
    assert proc.stdout == expected_bytes(name, "out")
    assert proc.stderr == expected_bytes(name, "err")


def test_every_subcommand_has_a_golden_case():
    covered = {argv[0] for _, argv, _ in CASES}
    assert covered == {
        "recognize",
        "host-tree",
        "basis",
        "completion-member",
        "completion-list",
        "feasible-edges",
        "count-trees",
        "enumerate-trees",
        "equiv",
        "is-basic",
        "gyo",
        "clique-tree",
        "compatible-tree",
        "is-dually-chordal",
        "is-basic-chordal",
        "swap-seq",
        "gen-random",
        "to-dot",
    }


def test_all_exit_codes_are_exercised():
    assert {code for _, _, code in CASES} == {0, 1, 2, 3}


def test_json_reports_have_stable_keys():
    for name in ("recognize-h2-json", "recognize-tri-json", "count-trees-h2-json"):
        data = json.loads(expected_bytes(name, "out"))
        assert sorted(data) == ["command", "exit_code", "inputs", "payload", "verdict"]
        for item in data["inputs"]:
            assert sorted(item) == ["path", "sha256"]
            assert len(item["sha256"]) == 64


def test_run_command_in_process():
    report = run_command(["count-trees", str(TESTS_DIR / "golden/inputs/h_big.hg")])
    assert report.exit_code == 0
    assert report.payload == {"count": 3}
    assert report.text == "3"
    assert report.inputs[0]["sha256"]


def test_usage_errors_do_not_crash():
    assert run_command([]).exit_code == 2
    assert run_command(["no-such-command"]).exit_code == 2
    assert run_command(["recognize"]).exit_code == 2  # missing file argument
    assert run_command(["gen-random", "--kind", "graph", "--n", "0", "--m", "1"]).exit_code == 2
    assert run_command(["gen-random", "--kind", "graph", "--n", "2", "--m", "-1"]).exit_code == 2


def test_bad_vertex_arguments_are_usage_errors():
    h2 = str(TESTS_DIR / "golden/inputs/h_big.hg")
    assert run_command(["completion-member", h2, "--set", "1,9"]).exit_code == 2
    assert run_command(["completion-member", h2, "--set", ","]).exit_code == 2
    assert run_command(["swap-seq", h2, "--from", "1-2,2-3", "--to", "1-2,2-3,3-4"]).exit_code == 2
    assert run_command(["swap-seq", h2, "--from", "1_2", "--to", "1-2"]).exit_code == 2


def test_gen_random_is_reproducible():
    a = run_cli(["gen-random", "--kind", "hypergraph", "--n", "5", "--m", "3", "--seed", "11"])
    b = run_cli(["gen-random", "--kind", "hypergraph", "--n", "5", "--m", "3", "--seed", "11"])
    c = run_cli(["gen-random", "--kind", "hypergraph", "--n", "5", "--m", "3", "--seed", "12"])
    assert a.stdout == b.stdout
    assert a.stdout != c.stdout


def test_guaranteed_hypertrees_always_recognize(tmp_path):
    for seed in range(20):
        proc = run_cli(
            ["gen-random", "--kind", "hypergraph", "--guarantee", "hypertree",
             "--n", "7", "--m", "5", "--seed", str(seed)]
        )
        inst = tmp_path / f"t{seed}.hg"
        inst.write_bytes(proc.stdout)
        assert run_cli(["recognize", str(inst)]).returncode == 0


def test_unconstrained_generation_hits_both_verdicts(tmp_path):
    verdicts = set()
    for seed in range(40):
        proc = run_cli(["gen-random", "--kind", "hypergraph", "--n", "5", "--m", "4", "--seed", str(seed)])
        inst = tmp_path / "x.hg"
        inst.write_bytes(proc.stdout)
        verdicts.add(run_cli(["recognize", str(inst)]).returncode)
        if verdicts == {0, 1}:
            break
    assert verdicts == {0, 1}


def test_shipped_fixtures_round_trip_canonically():
    from hypertree_lab import parse_instance, serialize

    for path in sorted((TESTS_DIR / "golden" / "inputs").iterdir()):
        if path.name == "bad.hg":
            continue
        text = path.read_text()
        assert serialize(parse_instance(text)) == text, path.name

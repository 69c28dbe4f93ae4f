import io
import json
import subprocess
import sys

import pytest

from prismatic.cli import main
from prismatic.families import paley_graph
from prismatic.graphio import parse_graph6, write_graph6
from prismatic.graphs import complementary_prism, cycle_graph


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv, stdin_text=None, monkeypatch=None):
    code, out, err = run_cli(capsys, argv, stdin_text, monkeypatch)
    assert code == 0, err
    return json.loads(out)


def test_construct_emits_graph6(capsys):
    code, out, _ = run_cli(capsys, ["construct", "--name", "cycle:5"])
    assert code == 0
    assert parse_graph6(out.strip()).adj == cycle_graph(5).adj


def test_construct_json_flag(capsys):
    report = run_json(capsys, ["construct", "--name", "paley:9", "--json"])
    assert report["n"] == 9 and report["edges"] == 18
    assert parse_graph6(report["graph6"]).adj == paley_graph(9).adj


def test_prism_command_builds_prism(capsys):
    code, out, _ = run_cli(capsys, ["prism", "--name", "cycle:5"])
    assert code == 0
    assert parse_graph6(out.strip()).adj == complementary_prism(cycle_graph(5)).adj


def test_prism_reads_stdin(capsys, monkeypatch):
    g6 = write_graph6(cycle_graph(4))
    code, out, _ = run_cli(capsys, ["prism"], stdin_text=g6 + "\n", monkeypatch=monkeypatch)
    assert code == 0
    assert parse_graph6(out.strip()).n == 8


def test_pentagon_prism_pipeline_matches_worked_example(capsys, monkeypatch):
    # prism --name paley:5 | aut
    _, prism_g6, _ = run_cli(capsys, ["prism", "--name", "paley:5"])
    report = run_json(capsys, ["aut"], stdin_text=prism_g6, monkeypatch=monkeypatch)
    assert report["order"] == 120
    assert report["transitive"] is True
    assert report["prism_of"]["ratio"] == 12
    assert report["prism_of"]["base_aut_order"] == 10
    assert report["prism_of"]["structure"] == "S5"


def test_aut_plain_graph(capsys):
    report = run_json(capsys, ["aut", "--name", "cycle:6"])
    assert report["order"] == 12
    assert "prism_of" not in report


def test_antimorph_command(capsys):
    report = run_json(capsys, ["antimorph", "--name", "paley:5"])
    assert report["found"] == 10
    assert report["self_complementary"] is True
    assert report["first"]["order"] == 4
    assert report["first"]["fixed_points"] == [0]


def test_antimorph_limit(capsys):
    report = run_json(capsys, ["antimorph", "--name", "paley:9", "--limit", "3"])
    assert report["found"] == 3


def test_antimorph_on_non_self_complementary(capsys):
    report = run_json(capsys, ["antimorph", "--name", "cycle:4"])
    assert report["found"] == 0
    assert report["self_complementary"] is False


def test_core_of_pentagon_prism(capsys):
    report = run_json(capsys, ["core", "--name", "cycle:5", "--prism"])
    assert report["status"] == "ok"
    assert report["case"] == "I_core"
    assert report["core_size"] == 10
    assert report["is_core_itself"] is True


def test_core_of_plain_graph(capsys):
    report = run_json(capsys, ["core", "--name", "cycle:6"])
    assert report["status"] == "ok"
    assert report["core_size"] == 2
    assert "case" not in report


def test_classify_family_member(capsys):
    report = run_json(capsys, ["classify", "--name", "path:4"])
    kinds = {m["kind"] for m in report["family_matches"]}
    assert kinds == {"C5", "A"}
    assert report["ratio"] == 4
    assert report["self_complementary"] is True
    assert report["prism_aut_structure"] == "SemidirectZ2"
    assert report["prism_aut_order"] == 8


def test_classify_pentagon(capsys):
    report = run_json(capsys, ["classify", "--name", "cycle:5"])
    assert report["ratio"] == 12
    assert report["prism_aut_order"] == 120
    assert report["prism_vertex_transitive"] is True
    assert report["prism_is_cayley"] is False
    assert report["prism_diameter"] == 2
    assert report["prism_not_lex_product"] is True


def test_cheeger_star_example(capsys):
    report = run_json(capsys, ["cheeger", "--name", "star:4", "--prism"])
    assert report["value"] == {"numerator": 3, "denominator": 4, "str": "3/4"}
    assert report["method"] == "closed_form"
    assert report["brute_force_value"] == report["value"]
    assert report["of"] == "complementary prism"


def test_cheeger_pentagon_prism(capsys):
    report = run_json(capsys, ["cheeger", "--name", "cycle:5", "--prism"])
    assert report["value"]["str"] == "1"


def test_cheeger_literal_graph(capsys):
    report = run_json(capsys, ["cheeger", "--name", "cycle:6"])
    assert report["value"] == {"numerator": 2, "denominator": 3, "str": "2/3"}
    assert report["method"] == "brute_force"
    assert len(report["witness_S"]) <= len(report["witness_T"])


def test_spectrum_with_closed_form_cross_check(capsys):
    report = run_json(capsys, ["spectrum", "--name", "paley:9", "--prism-closed-form"])
    assert report["prism_numeric_max_diff"] < 1e-9
    assert sum(mult for _, mult in report["prism_closed_form"]) == 18


def test_spectrum_plain(capsys):
    report = run_json(capsys, ["spectrum", "--name", "complete:3"])
    pairs = report["numeric"]
    assert len(pairs) == 2
    assert abs(pairs[0][0] - 2) < 1e-9 and pairs[0][1] == 1
    assert abs(pairs[1][0] + 1) < 1e-9 and pairs[1][1] == 2


def test_srg_command(capsys):
    report = run_json(capsys, ["srg", "--name", "figure_f9:1"])
    assert report["strongly_regular"] is True
    assert report["parameters"] == [9, 4, 1, 2]
    assert report["one_walk_regular"] is True
    assert report["self_complementary_eigenvalues"] == [4.0, 1.0, -2.0]
    report3 = run_json(capsys, ["srg", "--name", "figure_f9:3"])
    assert report3["strongly_regular"] is False
    assert report3["one_walk_regular"] is False
    assert report3["witness"]["power"] == 3
    assert report3["witness"]["kind"] == "diagonal"
    assert report3["edge_witness"]["power"] == 2


def test_theta_command(capsys):
    report = run_json(capsys, ["theta", "--name", "cycle:5"])
    assert abs(report["upper_bound"] - 5 ** 0.5) < 1e-9
    assert abs(report["complement_lower_bound"] - 5 ** 0.5) < 1e-9


def test_hamilton_modes(capsys):
    report = run_json(capsys, ["hamilton", "--name", "petersen", "--mode", "path"])
    assert report["witness"] is not None and len(report["witness"]) == 10
    report = run_json(capsys, ["hamilton", "--name", "petersen", "--mode", "cycle"])
    assert report["witness"] is None


def test_hamilton_path_between(capsys):
    report = run_json(
        capsys,
        ["hamilton", "--name", "cycle:4", "--mode", "path_between", "--endpoints", "0,1"],
    )
    assert report["witness"][0] == 0 and report["witness"][-1] == 1


def test_hamilton_constructions(capsys):
    report = run_json(capsys, ["hamilton", "--name", "paley:9", "--constructions"])
    assert len(report["prism_p8_path"]) == 18
    assert report["prism_ham_connected_pairs"] == 153


def test_hamilton_budget_unknown(capsys):
    report = run_json(
        capsys,
        ["hamilton", "--name", "paley:13", "--mode", "cycle", "--budget-nodes", "2"],
    )
    assert report["status"] == "unknown"


def test_invariants_command(capsys):
    report = run_json(capsys, ["invariants", "--name", "petersen"])
    assert (report["alpha"], report["omega"], report["chi"], report["kappa"]) == (4, 2, 3, 3)
    assert report["exact"] is True
    assert len(report["witnesses"]["independent_set"]) == 4


def test_verify_fixture_exa1(capsys):
    report = run_json(capsys, ["verify-fixture", "exa1"])
    assert report["antimorphism"] == {"order": 4, "fixed_points": [0]}
    assert report["retraction_verified"] is True
    assert report["core_size"] == 5 and report["core_is_k5"] is True
    assert report["case"] == "II_in_W1"


def test_verify_fixture_petersen(capsys):
    report = run_json(capsys, ["verify-fixture", "petersen"])
    assert report["aut_order_brute"] == report["aut_order_structured"] == 120
    assert report["ratio"] == 12
    assert report["is_core"] is True
    assert report["prism_of_c5_isomorphic"] is True


def test_verify_fixture_f9(capsys):
    report = run_json(capsys, ["verify-fixture", "f9"])
    for i in range(1, 5):
        sub = report["f9_%d" % i]
        assert sub["self_complementary"] is True
        assert sub["antimorphism_order"] == 4
        assert sub["fixed_points"] == 1
    assert report["f9_1"]["srg"] == [9, 4, 1, 2]
    assert report["f9_3"]["kappa"] == 3
    assert report["f9_2"]["kappa"] == report["f9_4"]["kappa"] == 4


def test_verify_fixture_unknown(capsys):
    code, _, err = run_cli(capsys, ["verify-fixture", "nonsense"])
    assert code == 2 and "error" in err


def test_sweep_small(capsys):
    report = run_json(capsys, ["sweep", "--max-n", "3"])
    assert report["failures"] == 0
    assert report["graphs_checked"] == 11  # 1 + 2 + 8


def test_bad_name_exits_2(capsys):
    code, _, err = run_cli(capsys, ["construct", "--name", "paley:8"])
    assert code == 2
    assert "error" in err


def test_bad_graph6_exits_2(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["aut"], stdin_text="!!", monkeypatch=monkeypatch)
    assert code == 2


def test_budget_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("PRISMATIC_BUDGET", "2")
    report = run_json(capsys, ["hamilton", "--name", "paley:13", "--mode", "cycle"])
    assert report["status"] == "unknown"


def test_console_script_pipeline():
    # end-to-end through the installed entry point
    first = subprocess.run(
        ["prismatic", "prism", "--name", "paley:5"],
        capture_output=True, text=True, check=True,
    )
    second = subprocess.run(
        ["prismatic", "aut"],
        input=first.stdout, capture_output=True, text=True, check=True,
    )
    report = json.loads(second.stdout)
    assert report["order"] == 120 and report["prism_of"]["ratio"] == 12

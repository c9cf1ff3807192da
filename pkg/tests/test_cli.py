"""Tests para el CLI de coarse-kit: subcomandos, workspace JSON y exit codes."""
import json

import pytest

from cli.bridge_utils import EXIT_FAILED, EXIT_OK, EXIT_USAGE, jsonable
from cli.config_loader import load_config
from cli.main import build_parser, main
from cli.workspace import Workspace


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestConfig:
    def test_defaults_without_file(self, no_config):
        config = load_config(no_config)
        assert config["exact_search_cap"] == 16
        assert config["bound_factor"] == 8
        assert config["default_depth"] == 6
        assert config["presets_dir"].endswith("presets")

    def test_user_values_override(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"default_depth": 3, "bound_factor": None}), encoding="utf-8")
        config = load_config(str(path))
        assert config["default_depth"] == 3
        assert config["bound_factor"] == 8

    def test_broken_file_falls_back(self, tmp_path, capsys):
        path = tmp_path / "config.json"
        path.write_text("[1, 2", encoding="utf-8")
        assert load_config(str(path))["exact_search_cap"] == 16
        assert "Advertencia" in capsys.readouterr().err


class TestParser:
    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["convert", "--direction", "family-to-entourage", "-i", "w.json"])
        assert args.command == "convert"
        assert args.input == "w.json"

    def test_unknown_subcommand_exits_with_usage(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 2


class TestJsonable:
    def test_infinity_and_tuples(self):
        assert jsonable({"d": float("inf"), "p": (1, 2), "s": {3, 1}}) == {"d": "inf", "p": [1, 2], "s": [1, 3]}


class TestConvert:
    def test_family_to_entourage(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 3}, "families": {"B": [[0, 1]]}})
        code, data = run(capsys, "convert", "--direction", "family-to-entourage",
                         "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["entourages"]["delta_B"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
        assert data["reports"]["convert"]["pairs"] == 4
        assert data["reports"]["convert"]["roundtrip_identity"] is True

    def test_empty_family(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 2}, "families": {"B": []}})
        code, data = run(capsys, "convert", "--direction", "family-to-entourage",
                         "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["reports"]["convert"]["pairs"] == 0

    def test_entourage_to_family(self, capsys, write_workspace, no_config):
        pairs = [[0, 0], [1, 1], [2, 2], [0, 1], [1, 0], [1, 2], [2, 1]]
        path = write_workspace({"ground_set": {"size": 3}, "entourages": {"E": pairs}})
        code, data = run(capsys, "convert", "--direction", "entourage-to-family",
                         "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["families"]["maximal_E"] == [[0, 1], [1, 2]]
        report = data["reports"]["convert"]
        assert report["reflexive"] and report["symmetric"]
        assert report["roundtrip_identity"] is True

    def test_output_file(self, capsys, tmp_path, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 2}, "families": {"B": [[0, 1]]}})
        target = tmp_path / "out.json"
        code = main(["convert", "--direction", "family-to-entourage", "-i", path,
                     "-o", str(target), "--config", no_config, "--json"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["entourages"]["delta_B"]


class TestUsageErrors:
    def test_invalid_json(self, capsys, tmp_path, no_config):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, data = run(capsys, "convert", "--direction", "family-to-entourage",
                         "-i", str(path), "--config", no_config, "--json")
        assert code == EXIT_USAGE
        assert data["success"] is False

    def test_index_out_of_range(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 2}, "families": {"B": [[0, 5]]}})
        code, _ = run(capsys, "convert", "--direction", "family-to-entourage",
                      "-i", path, "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path, no_config):
        code, data = run(capsys, "metrize", "-i", str(tmp_path / "nope.json"), "--config", no_config, "--json")
        assert code == EXIT_USAGE
        assert data["command"] == "metrize"

    def test_missing_input(self, capsys, no_config):
        code, _ = run(capsys, "convert", "--direction", "family-to-entourage", "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_bad_depth(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 2}, "families": {"B": [[0, 1]]}})
        code, _ = run(capsys, "metrize", "-i", path, "--depth", "0", "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_bad_log_level(self, capsys, no_config):
        code, _ = run(capsys, "verify", "--laws", "", "--log-level", "LOUD", "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_unknown_family(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 2}, "families": {"B": [[0, 1]]}})
        code, data = run(capsys, "metrize", "-i", path, "--family", "C", "--config", no_config, "--json")
        assert code == EXIT_USAGE
        assert "families.C" in data["error"]


class TestVerify:
    def test_no_laws_pass(self, capsys, no_config):
        code, data = run(capsys, "verify", "--laws", "", "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["command"] == "verify"
        assert data["origin"] == "preset:default"
        assert data["success"] is True
        assert data["laws"] == []

    def test_mutation_preset_fails(self, capsys, no_config):
        code, data = run(capsys, "verify", "--preset", "mutation", "--config", no_config, "--json")
        assert code == EXIT_FAILED
        law = data["laws"][0]
        assert law["mutation"] == "compose-order"
        assert law["counterexample"]["support_size"] <= 4

    def test_flags_override_preset(self, capsys, no_config):
        code, data = run(capsys, "verify", "--laws", "delta-image", "--seed", "4", "--trials", "10",
                         "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["spec"]["seed"] == 4
        assert data["laws"][0]["trials"] == 10

    def test_suite_from_workspace(self, capsys, write_workspace, no_config):
        path = write_workspace({"lawsuite": {"case": {"trials": 5}, "laws": ["union-closure"]}})
        code, data = run(capsys, "verify", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["origin"] == "workspace"
        assert data["laws"][0]["trials"] == 5

    def test_unknown_preset(self, capsys, no_config):
        code, _ = run(capsys, "verify", "--preset", "nope", "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_unknown_law(self, capsys, no_config):
        code, _ = run(capsys, "verify", "--laws", "no-such-law", "--config", no_config, "--json")
        assert code == EXIT_USAGE


class TestMetrize:
    def test_separated_blocks(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 4}, "families": {"B": [[0, 1], [2, 3]]}})
        code, data = run(capsys, "metrize", "-i", path, "--depth", "4", "--config", no_config, "--json")
        assert code == EXIT_OK
        matrix = data["metrics"]["metric_B"]["matrix"]
        assert matrix[0][1] == 1.0
        assert matrix[0][2] == "inf"
        assert len(data["chains"]["chain_B"]) == 4
        assert data["reports"]["metrize"]["passed"] is True

    def test_result_reloads(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 3}, "families": {"B": [[0, 1], [1, 2]]}})
        _, data = run(capsys, "metrize", "-i", path, "--config", no_config, "--json")
        workspace = Workspace.from_json(json.dumps(data))
        _, metric = workspace.metric("metric_B")
        _, chain = workspace.chain("chain_B")
        assert metric(0, 2) == 2.0
        assert chain.depth == 6

    def test_truncated_matrix_reloads(self, capsys, write_workspace, no_config):
        path = write_workspace({"families": {"B": [[x, x + 1] for x in range(8)]}, "ground_set": {"size": 9}})
        _, data = run(capsys, "metrize", "-i", path, "--depth", "2", "--config", no_config, "--json")
        saved = data["metrics"]["metric_B"]
        assert saved["truncated_depth"] == 2
        assert data["reports"]["metrize"]["triangle_violations"]
        _, metric = Workspace.from_json(json.dumps(data)).metric("metric_B")
        assert metric(0, 8) == float("inf")
        bare = {"ground_set": {"size": 9}, "metrics": {"m": {"matrix": saved["matrix"]}}}
        with pytest.raises(ValueError):
            Workspace.from_json(json.dumps(bare)).metric("m")


class TestAsdim:
    def test_brick_without_input(self, capsys, no_config):
        code, data = run(capsys, "asdim", "--mode", "brick", "--dim", "1", "--size", "16",
                         "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["command"] == "asdim"
        assert data["success"] is True
        assert data["n"] == 1
        assert data["cover"]["multiplicity"] <= 2

    def test_exact_on_workspace_metric(self, capsys, write_workspace, no_config):
        edges = [[x, x + 1, 1.0] for x in range(7)]
        path = write_workspace({"ground_set": {"size": 8}, "metrics": {"line": {"edges": edges, "size": 8}}})
        code, data = run(capsys, "asdim", "--mode", "exact", "-i", path, "--n", "1", "--bound", "1",
                         "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["asdim"]
        assert report["found"] is True
        assert report["verified"] is True
        assert data["decompositions"]["exact_line"] == report["parts"]

    def test_exact_without_solution(self, capsys, write_workspace, no_config):
        path = write_workspace({"metrics": {"line": {"window": [6]}}})
        code, data = run(capsys, "asdim", "--mode", "exact", "-i", path, "--n", "0", "--bound", "2",
                         "--config", no_config, "--json")
        assert code == EXIT_FAILED
        assert data["reports"]["asdim"]["found"] is False

    def test_exact_over_cap(self, capsys, write_workspace, no_config):
        path = write_workspace({"metrics": {"line": {"window": [20]}}})
        code, _ = run(capsys, "asdim", "--mode", "exact", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_matrix_violating_triangle(self, capsys, write_workspace, no_config):
        path = write_workspace({"metrics": {"m": {"matrix": [[0, 1, 10], [1, 0, 1], [10, 1, 0]]}}})
        code, _ = run(capsys, "asdim", "--mode", "exact", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_hurewicz_on_workspace_map(self, capsys, write_workspace, no_config):
        path = write_workspace({
            "metrics": {"plane": {"window": [16, 16]}, "line": {"window": [16]}},
            "maps": {"proj": {"source": "plane", "target": "line", "images": [x // 16 for x in range(256)]}},
        })
        code, data = run(capsys, "asdim", "--mode", "hurewicz", "-i", path, "--scales", "1",
                         "--config", no_config, "--json")
        assert code == EXIT_OK
        entry = data["reports"]["asdim"]["scales"][0]
        assert (entry["n_f"], entry["n_Y"], entry["n_X"]) == (1, 1, 2)

    def test_bad_scales(self, capsys, no_config):
        code, _ = run(capsys, "asdim", "--mode", "hurewicz", "--demo", "projection", "--size", "8",
                      "--scales", "0", "--config", no_config, "--json")
        assert code == EXIT_USAGE


class TestGroup:
    def test_bs12_divergence(self, capsys, write_workspace, no_config):
        path = write_workspace({"groups": {"bs": {
            "descriptor": {"kind": "bs12"}, "E": ["0/2^0|0", "0/2^0|1"], "F_radius": 2,
        }}})
        code, data = run(capsys, "group", "--action", "divergence", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["group_divergence"]
        assert report["witness"] is not None
        first, second = (set(entry["y_options"]) for entry in report["certificate"])
        assert not first & second

    def test_abelian_divergence_has_no_witness(self, capsys, write_workspace, no_config):
        path = write_workspace({"groups": {"z2": {
            "descriptor": {"kind": "Zn", "n": 2}, "E": ["0,0", "1,0"], "F_radius": 1, "search_radius": 2,
        }}})
        code, data = run(capsys, "group", "--action", "divergence", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["reports"]["group_divergence"].get("witness") is None

    def test_witness(self, capsys, write_workspace, no_config):
        path = write_workspace({"groups": {"z": {
            "descriptor": {"kind": "Zn", "n": 1}, "members": [["0", "2"], ["5", "6", "7"]],
        }}})
        code, data = run(capsys, "group", "--action", "witness", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["reports"]["group_witness"]["all_covered"] is True

    def test_svarc_milnor(self, capsys, write_workspace, no_config):
        path = write_workspace({"groups": {"z": {
            "descriptor": {"kind": "Zn", "n": 1}, "window": [41], "radius": 1, "candidate_radius": 6,
        }}})
        code, data = run(capsys, "group", "--action", "svarc-milnor", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_OK
        assert data["reports"]["group_svarc-milnor"]["passed"] is True

    def test_unknown_descriptor(self, capsys, write_workspace, no_config):
        path = write_workspace({"groups": {"g": {"descriptor": {"kind": "lamplighter"}}}})
        code, _ = run(capsys, "group", "--action", "witness", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_table_generator_out_of_range(self, capsys, write_workspace, no_config):
        table = [[(i + j) % 3 for j in range(3)] for i in range(3)]
        path = write_workspace({"groups": {"c3": {
            "descriptor": {"kind": "table", "mul": table, "generators": [5]}, "members": [["0", "1"]],
        }}})
        code, _ = run(capsys, "group", "--action", "witness", "-i", path, "--config", no_config, "--json")
        assert code == EXIT_USAGE


class TestHigson:
    def test_log_truncation(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 10001}, "functions": {"f": {"name": "log1p"}}})
        code, data = run(capsys, "higson", "--check", "truncation", "-i", path, "--block", "10",
                         "--prefix-step", "100", "--eps", "0.01", "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["higson_truncation"]
        assert report["stage_index"] == 8
        assert report["stage_size"] == 900

    def test_sine_is_inconclusive(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 500}, "functions": {"f": {"name": "sin"}}})
        code, data = run(capsys, "higson", "--check", "truncation", "-i", path, "--block", "10",
                         "--prefix-step", "50", "--no-full", "--eps", "0.1", "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["higson_truncation"]
        assert report["conclusive"] is False
        assert "stage_index" not in report or report["stage_index"] is None

    def test_eps_required(self, capsys, write_workspace, no_config):
        path = write_workspace({"ground_set": {"size": 20}, "functions": {"f": {"name": "linear"}}})
        code, _ = run(capsys, "higson", "--check", "truncation", "-i", path, "--block", "5",
                      "--prefix-step", "5", "--config", no_config, "--json")
        assert code == EXIT_USAGE

    def test_inclusion_reports_two_term_failure(self, capsys, write_workspace, no_config):
        path = write_workspace({
            "ground_set": {"size": 4},
            "families": {"B1": [[1, 2]], "B2": [[0, 1], [2, 3]]},
            "subsets": {"K": [0]},
        })
        code, data = run(capsys, "higson", "--check", "inclusion", "-i", path,
                         "--family", "B1", "--family", "B2", "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["higson_inclusion"]
        assert report["inclusion"] == {"K": True}
        assert report["two_term_inclusion"] == {"K": False}

    def test_proper_with_bound(self, capsys, write_workspace, no_config):
        path = write_workspace({
            "ground_set": {"size": 6},
            "families": {"B": [[0, 1], [1, 2], [4, 5]]},
            "subsets": {"K": [1]},
            "metrics": {"line": {"window": [6]}},
        })
        code, data = run(capsys, "higson", "--check", "proper", "-i", path, "--bound", "1",
                         "--config", no_config, "--json")
        assert code == EXIT_FAILED
        report = data["reports"]["higson_proper"]
        assert report["proper"]["violating_K"] == [1]
        assert report["equivalence"]["agree"] is True

    def test_star_defect(self, capsys, write_workspace, no_config):
        path = write_workspace({
            "ground_set": {"size": 2001},
            "functions": {"f": {"name": "log1p"}},
            "families": {"B2": [[x, x + 1] for x in range(0, 2000, 2)]},
            "subsets": {"K": list(range(1000))},
        })
        code, data = run(capsys, "higson", "--check", "star-defect", "-i", path, "--block", "10",
                         "--family", "B2", "--subset", "K", "--eps", "0.04", "--config", no_config, "--json")
        assert code == EXIT_OK
        report = data["reports"]["higson_star-defect"]
        assert report["hypotheses_hold"] is True
        assert report["holds"] is True

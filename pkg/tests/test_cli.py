import json

import pytest

from delcodes import Code, is_t_deletion_correcting, vt_code
from delcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class TestDist:
    def test_deletion_metric(self, capsys):
        assert run(capsys, "dist", "00011", "10101", "--metric", "deletion") == (
            0, "2\n", "",
        )

    def test_levenshtein_metric(self, capsys):
        code, out, _ = run(capsys, "dist", "0100", "110101", "--metric", "levenshtein")
        assert (code, out) == (0, "4\n")

    def test_hamming_metric(self, capsys):
        code, out, _ = run(capsys, "dist", "00011", "10101", "--metric", "hamming")
        assert (code, out) == (0, "3\n")

    def test_default_metric_is_deletion(self, capsys):
        code, out, _ = run(capsys, "dist", "00000", "11111")
        assert (code, out) == (0, "5\n")

    def test_unequal_lengths_domain_error(self, capsys):
        code, _, err = run(capsys, "dist", "0100", "110101")
        assert code == 1 and "error" in err

    def test_text_and_json_agree(self, capsys):
        _, text_out, _ = run(capsys, "dist", "00011", "10101", "--metric", "deletion")
        _, json_out, _ = run(
            capsys, "dist", "00011", "10101", "--metric", "deletion", "--json"
        )
        assert json.loads(json_out)["distance"] == int(text_out)


class TestBall:
    def test_constant_word(self, capsys):
        assert run(capsys, "ball", "00000", "--t", "1") == (0, "0000\n", "")

    def test_sorted_listing(self, capsys):
        code, out, _ = run(capsys, "ball", "0100", "--t", "1")
        assert code == 0 and out.splitlines() == ["000", "010", "100"]

    def test_bad_word_is_domain_error(self, capsys):
        code, _, err = run(capsys, "ball", "01a", "--t", "1")
        assert code == 1 and "error" in err

    def test_t_out_of_range(self, capsys):
        code, _, err = run(capsys, "ball", "01", "--t", "5")
        assert code == 1

    def test_missing_required_flag_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "ball", "01")
        assert code == 2

    def test_json_roundtrip(self, capsys):
        _, out, _ = run(capsys, "ball", "0100", "--t", "1", "--json")
        doc = json.loads(out)
        assert canonical(doc) == out.strip()
        assert doc["ball"] == ["000", "010", "100"]


class TestDominate:
    def test_yes_with_witness_counts(self, capsys):
        code, out, _ = run(capsys, "dominate", "1011", "0111", "--t", "1")
        assert code == 0 and out.startswith("yes")
        assert "|D_1(v)|=2" in out and "|D_1(u)|=3" in out

    def test_no(self, capsys):
        assert run(capsys, "dominate", "0111", "1011", "--t", "1") == (0, "no\n", "")

    def test_json_fields(self, capsys):
        _, out, _ = run(capsys, "dominate", "10101", "01110", "--t", "2", "--json")
        doc = json.loads(out)
        assert doc["dominant"] is True
        assert doc["ball_v"] <= doc["ball_u"]


class TestEnumerate:
    def test_brute_n2(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--t", "1")
        lines = out.splitlines()
        assert code == 0 and len(lines) == 6
        assert lines[0] == "01 00 brute"

    def test_closed_and_brute_agree(self, capsys):
        _, brute, _ = run(capsys, "enumerate", "--n", "5", "--t", "2")
        _, closed, _ = run(
            capsys, "enumerate", "--n", "5", "--t", "2", "--method", "closed"
        )
        pairs_of = lambda text: {
            tuple(line.split()[:2]) for line in text.splitlines()
        }
        assert pairs_of(brute) == pairs_of(closed)

    def test_closed_json_carries_sources(self, capsys):
        _, out, _ = run(
            capsys, "enumerate", "--n", "4", "--t", "1", "--method", "closed", "--json"
        )
        doc = json.loads(out)
        assert len(doc["pairs"]) == 14
        assert all(p["sources"] for p in doc["pairs"])

    def test_cap_is_domain_error(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "15", "--t", "1")
        assert code == 1


class TestVerify:
    def test_confirmed_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "4", "--t", "1")
        assert code == 0
        assert "missing 0" in out and "spurious 0" in out

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "6", "--t", "2", "--json")
        assert code == 0
        doc = json.loads(out)
        assert canonical(doc) == out.strip()
        assert doc["brute_count"] == doc["generated_count"] == 182

    def test_unsupported_t_is_domain_error(self, capsys):
        code, _, _ = run(capsys, "verify", "--n", "5", "--t", "3")
        assert code == 1


class TestCheck:
    @pytest.fixture
    def example_file(self, tmp_path):
        path = tmp_path / "example.code"
        path.write_text("# example\n00000\n11111\n00011\n11000\n10101\n01110\n")
        return str(path)

    def test_basic_report(self, capsys, example_file):
        code, out, _ = run(capsys, "check", example_file, "--t", "1")
        assert code == 0
        assert "deletion-correcting(t=1): yes" in out

    def test_perfect_and_basic_flags(self, capsys, example_file):
        code, out, _ = run(
            capsys, "check", example_file, "--t", "1", "--perfect", "--basic"
        )
        assert code == 0
        assert "perfect(t=1): no" in out
        assert "basic(t=1): yes" in out

    def test_collision_witness_printed(self, capsys, tmp_path):
        path = tmp_path / "bad.code"
        path.write_text("00000\n00001\n")
        code, out, _ = run(capsys, "check", str(path), "--t", "1")
        assert code == 0
        assert "deletion-correcting(t=1): no" in out
        assert "00000" in out and "00001" in out

    def test_json_fields(self, capsys, example_file):
        _, out, _ = run(
            capsys, "check", example_file, "--t", "1", "--perfect", "--basic", "--json"
        )
        doc = json.loads(out)
        assert doc["deletion_correcting"] is True
        assert doc["perfect"] is False
        assert doc["basic"] is True
        assert doc["collision"] is None

    def test_missing_file_is_domain_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "check", str(tmp_path / "nope.code"), "--t", "1")
        assert code == 1 and "error" in err

    def test_not_correcting_perfect_not_applicable(self, capsys, tmp_path):
        path = tmp_path / "bad.code"
        path.write_text("00000\n00001\n")
        code, out, _ = run(capsys, "check", str(path), "--t", "1", "--perfect")
        assert code == 0 and "not applicable" in out


class TestSearch:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "5", "--t", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("optimum 6")
        witness = Code(lines[1:])
        assert len(witness) == 6 and is_t_deletion_correcting(witness, 1)

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "5", "--t", "1", "--json")
        doc = json.loads(out)
        assert code == 0 and doc["optimum"] == 6 and doc["exhausted"] is True
        assert canonical(doc) == out.strip()

    def test_flags_change_nothing_at_small_n(self, capsys):
        _, a, _ = run(capsys, "search", "--n", "5", "--t", "1", "--json")
        _, b, _ = run(
            capsys,
            "search", "--n", "5", "--t", "1",
            "--no-basic-prune", "--no-force-constants", "--json",
        )
        assert json.loads(a)["optimum"] == json.loads(b)["optimum"]

    def test_canonical_flag_deterministic(self, capsys):
        _, a, _ = run(capsys, "search", "--n", "5", "--t", "1", "--canonical", "--json")
        _, b, _ = run(
            capsys,
            "search", "--n", "5", "--t", "1", "--canonical", "--no-basic-prune",
            "--json",
        )
        assert json.loads(a)["witness"] == json.loads(b)["witness"]

    def test_enumerate_lists_classes(self, capsys):
        code, out, _ = run(capsys, "search", "--n", "5", "--t", "1", "--enumerate")
        assert code == 0
        assert out.count("# class") == 2

    def test_enumerate_json(self, capsys):
        code, out, _ = run(
            capsys, "search", "--n", "5", "--t", "1", "--enumerate", "--json"
        )
        doc = json.loads(out)
        assert code == 0 and len(doc["classes"]) == 2 and doc["optimum"] == 6

    def test_enumerate_conflicts_with_canonical(self, capsys):
        code, _, err = run(
            capsys, "search", "--n", "5", "--t", "1", "--enumerate", "--canonical"
        )
        assert code == 2 and "conflict" in err

    def test_budget_exhaustion_exit_code(self, capsys):
        code, out, _ = run(
            capsys,
            "search", "--n", "7", "--t", "1",
            "--no-basic-prune", "--budget", "0.001",
        )
        assert code == 4
        assert "lower-bound" in out

    def test_threads_flag(self, capsys):
        _, a, _ = run(capsys, "search", "--n", "5", "--t", "1", "--json")
        _, b, _ = run(
            capsys, "search", "--n", "5", "--t", "1", "--threads", "2", "--json"
        )
        assert json.loads(a)["optimum"] == json.loads(b)["optimum"]

    def test_cap_is_domain_error(self, capsys):
        code, _, _ = run(capsys, "search", "--n", "13", "--t", "1")
        assert code == 1


class TestVt:
    def test_code_file_output_parses(self, capsys):
        code, out, _ = run(capsys, "vt", "--n", "5", "--a", "0")
        assert code == 0
        parsed = Code.from_text(out)
        assert parsed == vt_code(5, 0)

    def test_json(self, capsys):
        _, out, _ = run(capsys, "vt", "--n", "5", "--a", "0", "--json")
        doc = json.loads(out)
        assert doc["size"] == 6 and "00000" in doc["words"]

    def test_bad_residue_is_domain_error(self, capsys):
        code, _, _ = run(capsys, "vt", "--n", "5", "--a", "6")
        assert code == 1

    def test_pipes_into_check(self, capsys, tmp_path):
        _, out, _ = run(capsys, "vt", "--n", "6", "--a", "3")
        path = tmp_path / "vt.code"
        path.write_text(out)
        code, out, _ = run(capsys, "check", str(path), "--t", "1")
        assert code == 0 and "deletion-correcting(t=1): yes" in out


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2


class TestJsonDiscipline:
    @pytest.mark.parametrize(
        "argv",
        [
            ["ball", "0100", "--t", "1"],
            ["dist", "00011", "10101", "--metric", "levenshtein"],
            ["dominate", "1011", "0111", "--t", "1"],
            ["enumerate", "--n", "4", "--t", "1", "--method", "closed"],
            ["verify", "--n", "5", "--t", "2"],
            ["search", "--n", "4", "--t", "1"],
            ["search", "--n", "4", "--t", "1", "--enumerate"],
            ["vt", "--n", "6", "--a", "2"],
        ],
    )
    def test_every_json_document_reencodes_byte_identically(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0
        assert canonical(json.loads(out)) == out.strip()

    def test_search_text_and_json_numbers_agree(self, capsys):
        _, text, _ = run(capsys, "search", "--n", "5", "--t", "1")
        _, js, _ = run(capsys, "search", "--n", "5", "--t", "1", "--json")
        assert int(text.split()[1]) == json.loads(js)["optimum"]

    def test_verify_text_and_json_numbers_agree(self, capsys):
        _, text, _ = run(capsys, "verify", "--n", "5", "--t", "2")
        _, js, _ = run(capsys, "verify", "--n", "5", "--t", "2", "--json")
        doc = json.loads(js)
        assert f"enumerated {doc['brute_count']}" in text
        assert f"generated {doc['generated_count']}" in text

    def test_repeated_runs_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "search", "--n", "5", "--t", "1",
                          "--canonical", "--json")
        _, second, _ = run(capsys, "search", "--n", "5", "--t", "1",
                           "--canonical", "--json")
        a, b = json.loads(first), json.loads(second)
        a.pop("wall_time_ms"), b.pop("wall_time_ms")
        assert a == b

import json

import pytest

from catmag.cli import main
from catmag.documents import load_document, parse_document
from catmag import Matrix, kron, zeta_of

from cli_cases import CASES, FIXTURES, GOLDEN, resolve_argv


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("stem,argv,expected_exit", CASES, ids=[c[0] for c in CASES])
def test_golden(capsys, stem, argv, expected_exit):
    code, out, err = run(capsys, resolve_argv(argv))
    assert code == expected_exit
    assert err == ""
    assert out == GOLDEN.joinpath(f"{stem}.txt").read_text()


@pytest.mark.parametrize("stem,argv,expected_exit", CASES, ids=[c[0] for c in CASES])
def test_byte_identical_across_runs(capsys, stem, argv, expected_exit):
    first = run(capsys, resolve_argv(argv))
    second = run(capsys, resolve_argv(argv))
    assert first == second


class TestExitCodes:
    def test_missing_file(self, capsys):
        code, out, err = run(capsys, ["magnitude", str(FIXTURES / "nope.json")])
        assert code == 1
        assert "error:" in err

    def test_malformed_json(self, capsys):
        code, _, err = run(capsys, ["magnitude", str(FIXTURES / "malformed.json")])
        assert code == 1
        assert "line 1" in err

    def test_zeta_of_matrix_is_usage_error(self, capsys):
        code, _, err = run(capsys, ["zeta", str(FIXTURES / "ones-2x2.json")])
        assert code == 1

    def test_rota_needs_poset(self, capsys):
        code, _, err = run(capsys, ["rota", str(FIXTURES / "arrow.json")])
        assert code == 1
        assert "poset" in err

    def test_rota_unbounded_poset(self, capsys, tmp_path):
        doc = tmp_path / "antichain.json"
        doc.write_text('{"kind":"poset","objects":["a","b"],"relations":[]}')
        code, _, err = run(capsys, ["rota", str(doc)])
        assert code == 1
        assert "minimum" in err

    def test_product_rejects_matrix_inputs(self, capsys):
        code, _, err = run(
            capsys,
            ["product", str(FIXTURES / "ones-2x2.json"), str(FIXTURES / "arrow.json")],
        )
        assert code == 1

    def test_unknown_generator(self, capsys):
        code, _, err = run(capsys, ["gen", "torus", "3"])
        assert code == 1

    def test_generator_size_validation(self, capsys):
        code, _, err = run(capsys, ["gen", "cyclic-monoid", "0"])
        assert code == 1

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, ["frobnicate"])
        assert code == 1


class TestOutputFiles:
    def test_gen_writes_to_path(self, capsys, tmp_path):
        target = tmp_path / "d12.json"
        code, out, _ = run(capsys, ["gen", "divisors", "12", "-o", str(target)])
        assert code == 0
        assert out == ""
        poset = load_document(str(target))
        assert poset.objects == ("1", "2", "3", "4", "6", "12")

    def test_product_document_round_trips(self, capsys, tmp_path):
        target = tmp_path / "product.json"
        code, _, _ = run(
            capsys,
            ["product", str(FIXTURES / "arrow.json"), str(FIXTURES / "arrow.json"),
             "-o", str(target)],
        )
        assert code == 0
        product = load_document(str(target))
        z = Matrix([[1, 1], [0, 1]])
        assert zeta_of(product).matrix == kron(z, z)

    def test_product_magnitude_goes_to_stdout_with_output_file(self, capsys, tmp_path):
        target = tmp_path / "product.json"
        code, out, _ = run(
            capsys,
            ["product", str(FIXTURES / "arrow.json"), str(FIXTURES / "arrow.json"),
             "-o", str(target), "--magnitude"],
        )
        assert code == 0
        assert out == "magnitude = 1\n"


class TestJsonMode:
    def test_magnitude_json_parses(self, capsys):
        code, out, _ = run(
            capsys, ["magnitude", str(FIXTURES / "indiscrete-2.json"), "--format", "json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["magnitude"] == "1"
        assert report["weighting"] == {"x0": "1/2", "x1": "1/2"}

    def test_pinv_json_is_a_loadable_matrix_document(self, capsys):
        code, out, _ = run(
            capsys, ["pinv", str(FIXTURES / "ones-2x2.json"), "--format", "json"]
        )
        assert code == 0
        assert parse_document(out) == Matrix([["1/4", "1/4"], ["1/4", "1/4"]])

    def test_singular_mobius_json(self, capsys):
        code, out, _ = run(
            capsys, ["mobius", str(FIXTURES / "indiscrete-2.json"), "--format", "json"]
        )
        assert code == 2
        assert json.loads(out) == {"kind": "singular-zeta", "rank": 1}


class TestEmittedDocumentsReparse:
    @pytest.mark.parametrize(
        "argv",
        [
            ["gen", "divisors", "12"],
            ["gen", "chain", "4"],
            ["gen", "discrete", "0"],
            ["gen", "indiscrete", "3"],
            ["gen", "cyclic-monoid", "4"],
            ["product", "arrow.json", "arrow.json"],
            ["coproduct", "arrow.json", "divisors-6.json"],
        ],
    )
    def test_round_trip(self, capsys, argv):
        code, out, _ = run(capsys, resolve_argv(argv))
        assert code == 0
        first = parse_document(out)
        from catmag.documents import dump_json, structure_to_obj

        assert dump_json(structure_to_obj(first)) == out

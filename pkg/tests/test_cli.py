import json

import pytest

from hesscoh.core.models import PolynomialPayload
from hesscoh.localization.hessenberg import HessenbergFunction
from hesscoh.main import EXIT_FAILED, EXIT_INVALID, EXIT_OK, main
from hesscoh.presentation.relations import ideal_for


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_fixed_points(capsys):
    assert main(["fixed-points", "--h", "2,3,3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "4 fixed points" in out
    assert "321" in out


def test_invalid_hessenberg_function(capsys):
    assert main(["fixed-points", "--h", "2,1,3"]) == EXIT_INVALID
    assert "error:" in capsys.readouterr().err


@pytest.mark.parametrize("extra", [[], ["--word", "2,1,2"]])
def test_billey_type_a(capsys, extra):
    assert main(["billey", "--cartan", "A2", "--v", "1", "--w", "321", *extra]) == EXIT_OK
    assert "t3 - t1" in capsys.readouterr().out


def test_billey_json(capsys):
    assert main(["billey", "--cartan", "A2", "--v", "1", "--w", "321", "--json"]) == EXIT_OK
    document = _json(capsys)
    assert document["schema_version"] == "1"
    assert document["command"] == "billey"
    assert document["result"]["value_text"] == "t3 - t1"


def test_billey_b2(capsys):
    assert main(["billey", "--cartan", "B2", "--v", "1", "--w", "1,2,1,2", "--json"]) == EXIT_OK
    assert _json(capsys)["result"]["value_text"] == "2*a2 + 2*a1"


def test_billey_rejects_non_reduced_word(capsys):
    assert main(["billey", "--cartan", "A2", "--v", "1,1", "--w", "321"]) == EXIT_INVALID


def test_verify(capsys):
    assert main(["verify", "--h", "3,3,4,4"]) == EXIT_OK


def test_verify_all(capsys):
    assert main(["verify-all", "--n", "4"]) == EXIT_OK
    assert "14 of 14" in capsys.readouterr().out


def test_verify_all_refuses_large_n(capsys):
    assert main(["verify-all", "--n", "7"]) == EXIT_INVALID
    captured = capsys.readouterr()
    assert "--allow-large" in captured.err
    assert captured.out == ""


def test_cfrac(capsys):
    assert main(["cfrac", "--c", "1/4", "--m", "20"]) == EXIT_OK
    assert main(["cfrac", "--c", "1", "--m", "3"]) == EXIT_FAILED
    assert main(["cfrac", "--c", "1/4,1/5,1/6"]) == EXIT_OK


def test_cfrac_needs_m(capsys):
    assert main(["cfrac", "--c", "1/4"]) == EXIT_INVALID


def test_peterson_actions(capsys):
    assert main(["peterson", "class", "--n", "3", "--A", "1"]) == EXIT_OK
    assert main(["peterson", "monk", "--n", "4", "--i", "2", "--A", "1,3"]) == EXIT_OK
    assert main(["peterson", "giambelli", "--n", "4", "--A", "1,2"]) == EXIT_OK
    assert main(["peterson", "basis", "--n", "4"]) == EXIT_OK
    assert main(["peterson", "general", "--cartan", "B2", "--K", "1"]) == EXIT_OK
    assert main(["peterson", "class", "--cartan", "G2", "--K", "1,2"]) == EXIT_OK


def test_peterson_class_json(capsys):
    assert main(["peterson", "class", "--n", "3", "--A", "1", "--json"]) == EXIT_OK
    values = [v["value"] for v in _json(capsys)["result"]["values"]]
    assert values == ["0", "t", "0", "2*t"]


def test_hilbert(capsys):
    assert main(["hilbert", "--h", "2,3,3"]) == EXIT_OK
    assert "1 + 2q^2 + q^4" in capsys.readouterr().out
    assert main(["hilbert", "--h", "2,3,3", "--equivariant"]) == EXIT_OK


def test_peterson_presentation(capsys):
    assert main(["peterson-presentation", "--n", "3"]) == EXIT_OK
    assert main(["peterson-presentation", "--cartan", "B2"]) == EXIT_OK


def test_fij_and_ideal(capsys):
    assert main(["fij", "--n", "3"]) == EXIT_OK
    capsys.readouterr()
    assert main(["ideal", "--h", "3,3,4,4", "--json"]) == EXIT_OK
    assert len(_json(capsys)["result"]["generators"]) == 4


def test_unknown_cartan_type(capsys):
    assert main(["peterson-presentation", "--cartan", "Z3"]) == EXIT_INVALID


def test_verify_all_prints_budget_first(capsys):
    assert main(["verify-all", "--n", "3"]) == EXIT_OK
    first = capsys.readouterr().out.splitlines()[0]
    assert first.startswith("budget:")
    assert "5 Hessenberg functions" in first
    assert "15 fixed points" in first
    assert "45 vanishing checks" in first


def test_verify_all_json_budget(capsys):
    assert main(["verify-all", "--n", "3", "--json"]) == EXIT_OK
    result = _json(capsys)["result"]
    budget = result["budget"]
    assert budget["n"] == 3
    assert budget["hessenberg_functions"] == result["count"] == 5
    assert budget["fixed_points"] == sum(c["fixed_point_count"] for c in result["certificates"])


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-all", "--n", "3"],
        ["verify-all", "--n", "3", "--json"],
        ["billey", "--cartan", "B2", "--v", "1", "--w", "1,2,1,2", "--json"],
        ["peterson", "basis", "--n", "4", "--json"],
    ],
)
def test_output_is_deterministic(capsys, argv):
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first


def test_ideal_json_decodes_to_generators(capsys):
    assert main(["ideal", "--h", "3,3,4,4", "--json"]) == EXIT_OK
    payloads = _json(capsys)["result"]["generators_json"]
    decoded = [PolynomialPayload.model_validate(p).to_polynomial() for p in payloads]
    assert decoded == list(ideal_for(HessenbergFunction.parse("3,3,4,4")).generators)

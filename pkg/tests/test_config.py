import json
from fractions import Fraction

import pytest

from asua.config.loader import convert_keys, convert_to_camel, load_config, save_config
from asua.config.schema import Config
from asua.utils.helpers import (
    format_decimal,
    format_rational,
    parse_int_list,
    parse_int_range,
    parse_rational,
)


def test_defaults():
    config = Config()
    assert config.solver.float_tolerance == 1e-9
    assert config.simulation.walks == 100_000
    assert config.simulation.seed == 7
    assert config.simulation.step_cap == 10**9
    assert config.survey.absorber == "each"
    assert config.output.format == "tsv"
    assert config.output.decimal_digits == 12


def test_missing_file_gives_defaults(tmp_path):
    assert load_config(tmp_path / "nope.json") == Config()


def test_save_writes_camel_case(tmp_path):
    path = tmp_path / "sub" / "config.json"
    config = Config()
    config.output.decimal_digits = 4
    save_config(config, path)
    data = json.loads(path.read_text())
    assert data["output"]["decimalDigits"] == 4
    assert "stepCap" in data["simulation"]
    assert load_config(path).output.decimal_digits == 4


def test_invalid_json_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path) == Config()


def test_invalid_value_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"simulation": {"walks": 0}}))
    assert load_config(path).simulation.walks == 100_000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("ASUA_SIMULATION__WALKS", "250")
    monkeypatch.setenv("ASUA_OUTPUT__FORMAT", "json")
    config = Config()
    assert config.simulation.walks == 250
    assert config.output.format == "json"


def test_key_conversion():
    assert convert_keys({"solver": {"exactOrderLimit": 3}}) == {"solver": {"exact_order_limit": 3}}
    assert convert_to_camel({"output": {"decimal_digits": 2}, "log_level": "INFO"}) == {
        "output": {"decimalDigits": 2},
        "logLevel": "INFO",
    }
    assert convert_keys(convert_to_camel(Config().model_dump())) == Config().model_dump()


# --- number formatting ---

@pytest.mark.parametrize(
    "value, digits, text",
    [
        (Fraction(1), 12, "1.000000000000"),
        (Fraction(2, 3), 3, "0.667"),
        (Fraction(49, 5), 2, "9.80"),
        (Fraction(1, 8), 2, "0.13"),
        (Fraction(-1, 2), 0, "-1"),
        (Fraction(-1, 1000), 2, "0.00"),
    ],
)
def test_format_decimal(value, digits, text):
    assert format_decimal(value, digits) == text


def test_format_rational_keeps_denominator():
    assert format_rational(Fraction(4)) == "4/1"
    assert format_rational(Fraction(7, 2)) == "7/2"


def test_parse_helpers():
    assert parse_rational(" 7/2 ") == Fraction(7, 2)
    assert parse_int_range("2..5") == range(2, 6)
    assert parse_int_range("7") == range(7, 8)
    assert parse_int_list("2,3") == [2, 3]
    assert parse_int_list("") == []
    with pytest.raises(ValueError):
        parse_int_range("5..2")
    with pytest.raises(ValueError):
        parse_rational("")

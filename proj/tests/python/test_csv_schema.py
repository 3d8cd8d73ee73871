import pytest

from promac.csv_schema import SCHEMAS, SchemaError, validate_csv


def test_headered_empty_csv_is_valid():
    for scenario, columns in SCHEMAS.items():
        assert validate_csv(",".join(columns) + "\n", scenario) == []


def test_missing_column_is_named():
    with pytest.raises(SchemaError, match="'ci'"):
        validate_csv("scheme,tag_bits,q,success\nwindow,8,0.5,0.9\n", "fig8")


def test_wrong_scenario_is_rejected():
    with pytest.raises(SchemaError):
        validate_csv("scheme,k_drops,discarded\nspmac,1,0\n", "fig4a")
    with pytest.raises(SchemaError):
        validate_csv("a\n", "fig99")


def test_numeric_columns_and_line_endings():
    header = "scheme,k_drops,discarded\n"
    with pytest.raises(SchemaError, match="not numeric"):
        validate_csv(header + "spmac,one,0\n", "dos")
    with pytest.raises(SchemaError, match="LF"):
        validate_csv(header.replace("\n", "\r\n"), "dos")

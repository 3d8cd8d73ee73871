"""Column contracts of the runner's CSV output, shared with plotting code."""

import csv
import io

ANALYSIS = ("scheme", "tag_bits", "g", "immediate_bits", "x", "y_min", "y_max")

SCHEMAS = {
    "delay": ANALYSIS,
    "resilience": ANALYSIS,
    "memory": ANALYSIS,
    "jam": ("scheme", "tag_bits", "q", "success", "ci"),
    "channel": ("scheme", "tag_bits", "channel", "mean_unverifiable", "ci"),
    "predictor": ("scheme", "tag_bits", "channel", "alpha", "success", "ci"),
    "dos": ("scheme", "k_drops", "discarded"),
    "deps": ("order", "g", "rank", "length", "marks"),
}

FIGURE_SCENARIOS = {
    "fig4a": "delay",
    "fig4b": "resilience",
    "fig5a": "delay",
    "fig5b": "resilience",
    "fig6a": "delay",
    "fig6b": "resilience",
    "fig8": "jam",
    "fig9": "predictor",
    "fig10": "memory",
    "fig11": "dos",
    "fig12a": "delay",
    "fig12b": "resilience",
}

_NUMERIC = {"tag_bits", "g", "immediate_bits", "x", "y_min", "y_max", "q", "success", "ci",
            "mean_unverifiable", "alpha", "k_drops", "discarded", "order", "rank", "length"}


class SchemaError(ValueError):
    pass


def validate_csv(text, target):
    """Check CSV text against a scenario or figure id; returns the rows as dicts."""
    scenario = FIGURE_SCENARIOS.get(target, target)
    if scenario not in SCHEMAS:
        raise SchemaError(f"unknown scenario or figure '{target}'")
    expected = SCHEMAS[scenario]
    if "\r" in text:
        raise SchemaError("CSV must use LF line endings")
    reader = csv.DictReader(io.StringIO(text))
    header = tuple(reader.fieldnames or ())
    for column in expected:
        if column not in header:
            raise SchemaError(f"missing column '{column}'")
    if header != expected:
        raise SchemaError(f"unexpected columns {header}, expected {expected}")
    rows = list(reader)
    for n, row in enumerate(rows, start=2):
        for column in expected:
            if column in _NUMERIC:
                try:
                    float(row[column])
                except (TypeError, ValueError):
                    raise SchemaError(f"line {n}: column '{column}' is not numeric") from None
    return rows


def main(argv=None):
    import argparse
    import sys

    parser = argparse.ArgumentParser(description="Validate runner CSV files against their column contract.")
    parser.add_argument("target", help="scenario name or figure id")
    parser.add_argument("files", nargs="+")
    args = parser.parse_args(argv)
    status = 0
    for path in args.files:
        with open(path, newline="") as f:
            try:
                rows = validate_csv(f.read(), args.target)
                if not rows:
                    raise SchemaError("no data rows")
            except SchemaError as e:
                print(f"{path}: {e}", file=sys.stderr)
                status = 1
    return status


if __name__ == "__main__":
    raise SystemExit(main())

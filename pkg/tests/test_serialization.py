import math
from fractions import Fraction

from hypothesis import given, strategies as st

from kernel_entropy.serialization import csv_text, dumps, format_number, parse_number, read_csv


def test_format_number():
    assert format_number(0.1) == "0.10000000000000001"
    assert format_number(3) == "3"
    assert format_number(Fraction(4, 3)) == "4/3"
    assert format_number(None) == ""
    assert format_number(float("nan")) == "nan"
    assert format_number(-0.0) == "-0"


finite = st.floats(allow_nan=False, allow_infinity=True)
cell = st.one_of(finite, st.integers(-10**6, 10**6), st.none(),
                 st.fractions(max_denominator=1000).filter(lambda f: f.denominator != 1))


@given(st.lists(st.lists(cell, min_size=3, max_size=3), max_size=8))
def test_csv_round_trip(rows):
    text = csv_text(("a", "b", "c"), rows)
    header, back = read_csv(text)
    assert header == ["a", "b", "c"]
    assert csv_text(header, back) == text
    for r, b in zip(rows, back):
        for u, v in zip(r, b):
            if isinstance(u, float):
                assert u == v or (math.isnan(u) and math.isnan(v))
                assert math.copysign(1, u) == math.copysign(1, v)
            else:
                assert u == v


@given(finite)
def test_parse_inverts_format(v):
    assert parse_number(format_number(v)) == v


def test_dumps_is_sorted_and_handles_fractions():
    text = dumps({"b": Fraction(1, 3), "a": (1, 2)})
    assert text.index('"a"') < text.index('"b"')
    assert '"1/3"' in text and text.endswith("\n")

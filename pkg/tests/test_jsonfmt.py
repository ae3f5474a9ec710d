import json
import math

import pytest

from octafar.jsonfmt import canonical_dumps, format_float


def test_format_float_nine_digits():
    assert format_float(2 / 3) == "0.666666667"
    assert format_float(math.sqrt(259) / 6) == "2.68224616"
    assert format_float(0.0) == "0"
    assert format_float(-0.0) == "0"
    assert format_float(1.0) == "1"
    assert format_float(3.0) == "3"


def test_format_float_rejects_non_finite():
    with pytest.raises(ValueError):
        format_float(float("nan"))
    with pytest.raises(ValueError):
        format_float(float("inf"))


def test_canonical_dumps_round_trips():
    payload = {
        "a": [1, 2.5, "x", None, True, False],
        "b": {"nested": [0.1, -3]},
    }
    text = canonical_dumps(payload)
    assert json.loads(text) == {
        "a": [1, 2.5, "x", None, True, False],
        "b": {"nested": [0.1, -3]},
    }
    assert text == canonical_dumps(payload)


def test_canonical_dumps_is_compact():
    assert canonical_dumps({"k": [1, 2]}) == '{"k":[1,2]}'

import json
import math

import numpy as np
from hypothesis import given, strategies as st

from spintunnel import io, angle_hamiltonian as ah
from spintunnel.exact_solver import spectrum_exact
from spintunnel.spin_models import Mn12, to_spin_params


def test_fmt():
    assert io.fmt(True) == "true" and io.fmt(np.bool_(False)) == "false"
    assert io.fmt(0.0) == "0" and io.fmt(-0.0) == "0"
    assert io.fmt(math.nan) == "nan"
    assert io.fmt(3) == "3"
    assert io.fmt(1 / 3) == "0.333333333333"


@given(st.floats(allow_nan=False, allow_infinity=False, width=64))
def test_fmt_roundtrip_12_digits(x):
    y = float(io.fmt(x))
    assert y == x or abs(y - x) <= 1e-11 * abs(x)


def test_spectrum_csv_roundtrip():
    spec = spectrum_exact(to_spin_params(Mn12()))
    header, rows, comments = io.read_csv(io.spectrum_csv(spec))
    assert header == ["index", "energy", "source"]
    assert comments == ["unit=kelvin"]
    assert float(rows[0][1]) == -60.0 and rows[0][2] == "exact_jm"
    assert len(rows) == 21


def test_angle_outputs_deterministic():
    h = ah.closed_form_fe8(0.275, 0.046, 10)
    assert io.angle_csv(h) == io.angle_csv(ah.closed_form_fe8(0.275, 0.046, 10))
    doc = json.loads(io.angle_json(h))
    assert doc["form"] == "large_n_closed" and len(doc["phi"]) == len(doc["V"]) == ah.DEFAULT_GRID


def test_csv_quotes_commas():
    text = io.csv_text(("a", "b"), [("x, y", 1.5)])
    assert io.read_csv(text)[1] == [["x, y", "1.5"]]

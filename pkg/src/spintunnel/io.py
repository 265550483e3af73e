"""CSV and JSON serialisation with locale-free, fixed 12-digit formatting."""
from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .analysis import SWEEP_COLUMNS, SweepResult
from .angle_hamiltonian import AngleHamiltonian
from .exact_solver import Spectrum


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if x == 0.0:
        return "0"
    return "%.12g" % x


def csv_text(header, rows, comments=()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) for v in r])
    return buf.getvalue()


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return None if math.isnan(x) else float(fmt(x))
    return obj


def json_text(obj) -> str:
    return json.dumps(_clean(obj), indent=2, sort_keys=True) + "\n"


def spectrum_rows(spec: Spectrum):
    return [(i, e, spec.source) for i, e in enumerate(spec.values)]


def spectrum_csv(spec: Spectrum) -> str:
    return csv_text(("index", "energy", "source"), spectrum_rows(spec), comments=[f"unit={spec.unit}"])


def spectrum_json(spec: Spectrum) -> str:
    return json_text({"source": spec.source, "unit": spec.unit, "dimension": spec.dimension,
                      "converged": spec.converged, "values": list(spec.values)})


def angle_csv(h: AngleHamiltonian) -> str:
    return csv_text(("phi", "V", "I", "K"), h.table(), comments=[f"unit={h.unit}", f"form={h.form}"])


def angle_json(h: AngleHamiltonian) -> str:
    model = None
    if h.model is not None:
        m = h.model
        model = {"A": m.A, "B": m.B, "G": m.G, "j": m.j, "unit": m.unit}
    t = h.table()
    return json_text({"form": h.form, "unit": h.unit, "xi": h.xi, "model": model,
                      "phi": t[:, 0], "V": t[:, 1], "I": t[:, 2], "K": t[:, 3]})


def sweep_csv(res: SweepResult) -> str:
    return csv_text(SWEEP_COLUMNS, [r.as_tuple() for r in res.rows],
                    comments=[f"unit={res.unit}", f"family={res.family}",
                              f"parameter_name={res.parameter_name}"])


def sweep_json(res: SweepResult) -> str:
    return json_text({"parameter_name": res.parameter_name, "unit": res.unit, "family": res.family,
                      "rows": [dict(zip(SWEEP_COLUMNS, r.as_tuple())) for r in res.rows]})


def read_csv(text: str):
    """Parse a file written by :func:`csv_text` into ``(header, rows, comments)``."""
    lines = text.splitlines()
    comments = [l[2:] for l in lines if l.startswith("# ")]
    body = list(csv.reader(l for l in lines if l and not l.startswith("#")))
    return body[0], body[1:], comments

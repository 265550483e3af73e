"""Command-line entry point: ``spintunnel <command> [options]``.

Every command writes CSV (default) or JSON to ``--out``, to
``$SPINTUNNEL_OUTDIR/<command>.<format>`` when that variable is set, or to
stdout. Exit status: 0 success, 1 validation failure, 2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import analysis, angle_hamiltonian as ah, exact_solver as ex, gcm_kernels, io, semiclassical, validation
from .spectral_solver import IllPosedError, SolverConfig, solve
from .spin_models import SpinParams, check, preset_from_name, to_spin_params

COMMANDS = ("exact", "surface", "kernels", "angle", "solve", "compare", "sweep", "validate")
PRESET_KEYS = ("chi", "Ns", "D", "E", "S", "h")
RAW_KEYS = ("A", "B", "G", "j")
OUTDIR_ENV = "SPINTUNNEL_OUTDIR"
PRESETS = ("lipkin", "mn12", "fe8")


class ConfigError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(prog="spintunnel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="JSON file with option defaults; flags override it")
        sp.add_argument("--preset", help="lipkin | mn12 | fe8")
        for k in RAW_KEYS + PRESET_KEYS:
            sp.add_argument(f"--{k}", dest=k, default=None)
        sp.add_argument("--unit", choices=("kelvin", "epsilon"))
        sp.add_argument("--form", default=None, help="full | wigner | closed")
        sp.add_argument("--nmax", type=int, default=None)
        sp.add_argument("--grid", type=int, default=None)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("--workers", type=int, default=None)
    return parser


def _merge_config(args):
    opts = {k: v for k, v in vars(args).items() if k != "config"}
    if args.config:
        try:
            with open(args.config) as fh:
                file_opts = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}")
        for k, v in file_opts.items():
            if opts.get(k) is None:
                opts[k] = v
    opts.setdefault("format", None)
    opts["format"] = opts["format"] or "csv"
    return opts


def _num(value, key):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"--{key} expects a number, got {value!r}")


def parse_values(text, key):
    """``"4:40:2"`` (inclusive range), ``"1,2,3"`` or a single number."""
    text = str(text)
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"--{key} range must be start:stop:step")
        a, b, s = (_num(x, key) for x in parts)
        if s <= 0 or b < a:
            raise ConfigError(f"--{key} range {text!r} is empty")
        n = int(math.floor((b - a) / s + 1e-9)) + 1
        return [round(a + i * s, 12) for i in range(n)]
    return [_num(x, key) for x in text.split(",")]


def _preset_kw(opts):
    return {k: _num(opts[k], k) for k in PRESET_KEYS if opts.get(k) is not None}


def resolve_model(opts):
    """Return ``(preset or None, SpinParams)``; exactly one source allowed."""
    raw = {k: opts.get(k) for k in RAW_KEYS if opts.get(k) is not None}
    if opts.get("preset") and raw:
        raise ConfigError("give either --preset or raw --A/--B/--G/--j, not both")
    if opts.get("preset"):
        if opts["preset"] not in PRESETS:
            raise ConfigError(f"unknown preset {opts['preset']!r} (expected one of {', '.join(PRESETS)})")
        try:
            preset = preset_from_name(opts["preset"], **_preset_kw(opts))
            return preset, to_spin_params(preset)
        except ValueError as exc:
            raise ConfigError(str(exc))
    if not raw:
        raise ConfigError("no model: pass --preset or raw --A --B --G --j")
    if "j" not in raw:
        raise ConfigError("raw mode needs --j")
    p = SpinParams(A=_num(raw.get("A", 0), "A"), B=_num(raw.get("B", 0), "B"),
                   G=_num(raw.get("G", 0), "G"), j=_num(raw["j"], "j"),
                   unit=opts.get("unit") or "epsilon")
    try:
        check(p)
    except ValueError as exc:
        raise ConfigError(str(exc))
    return None, p


def _angle(opts, preset, p):
    form = opts.get("form") or ("closed" if preset is not None else "full")
    if form not in ("closed", "full", "wigner"):
        raise ConfigError(f"--form must be full, wigner or closed, got {form!r}")
    if form == "closed" and preset is None:
        raise ConfigError("--form closed needs a --preset")
    try:
        return ah.build(preset if form == "closed" else p, form, n_grid=opts.get("grid") or ah.DEFAULT_GRID)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _solver_cfg(opts):
    try:
        return SolverConfig(n_max=opts.get("nmax") or 64)
    except ValueError as exc:
        raise ConfigError(str(exc))


def cmd_exact(opts):
    _, p = resolve_model(opts)
    spec = ex.spectrum_exact(p)
    return io.spectrum_csv(spec) if opts["format"] == "csv" else io.spectrum_json(spec)


def cmd_surface(opts):
    _, p = resolve_model(opts)
    alpha, e = semiclassical.surface_curve(p, n=opts.get("grid") or 1024)
    a_min, e_min = semiclassical.semiclassical_minimum(p)
    if opts["format"] == "json":
        return io.json_text({"unit": p.unit, "xi": semiclassical.minimize_xi(p), "alpha": alpha,
                             "energy": e, "alpha_min": a_min, "energy_min": e_min})
    return io.csv_text(("alpha", "energy"), zip(alpha, e),
                       comments=[f"unit={p.unit}", f"xi={io.fmt(semiclassical.minimize_xi(p))}",
                                 f"energy_min={io.fmt(e_min)}"])


def cmd_kernels(opts):
    _, p = resolve_model(opts)
    n = opts.get("grid") or 65
    xi = semiclassical.minimize_xi(p)
    rows = gcm_kernels.kernel_grid(p, xi, n, n)
    header = ("theta", "phi_bar", "energy_re", "energy_im", "overlap")
    if opts["format"] == "json":
        return io.json_text({"unit": p.unit, "xi": xi, **{h: rows[:, i] for i, h in enumerate(header)}})
    return io.csv_text(header, rows, comments=[f"unit={p.unit}", f"xi={io.fmt(xi)}"])


def cmd_angle(opts):
    preset, p = resolve_model(opts)
    h = _angle(opts, preset, p)
    return io.angle_csv(h) if opts["format"] == "csv" else io.angle_json(h)


def _solve(opts, preset, p):
    h = _angle(opts, preset, p)
    try:
        return h, solve(h, _solver_cfg(opts))
    except IllPosedError as exc:
        raise ConfigError(str(exc))


def cmd_solve(opts):
    preset, p = resolve_model(opts)
    _, spec = _solve(opts, preset, p)
    return io.spectrum_csv(spec) if opts["format"] == "csv" else io.spectrum_json(spec)


def cmd_compare(opts):
    preset, p = resolve_model(opts)
    exact = ex.spectrum_exact(p)
    h, ang = _solve(opts, preset, p)
    n = min(len(exact), len(ang))
    rel = [analysis.relative_error(a, e) for a, e in zip(ang.values[:n], exact.values[:n])]
    summary = {"ground_exact": exact.ground, "ground_angle": ang.ground,
               "rel_error_percent": 100 * analysis.relative_error(ang.ground, exact.ground),
               "unit": p.unit, "form": h.form}
    rows = list(zip(range(n), exact.values[:n], ang.values[:n], rel))
    if opts["format"] == "json":
        return io.json_text({**summary, "rows": [dict(zip(("index", "exact", "angle", "relative_error"), r))
                                                 for r in rows]})
    comments = [f"{k}={io.fmt(v)}" for k, v in summary.items()]
    return io.csv_text(("index", "exact", "angle", "relative_error"), rows, comments=comments)


def cmd_sweep(opts):
    if opts.get("preset") not in PRESETS:
        raise ConfigError(f"sweep needs --preset, one of {', '.join(PRESETS)}")
    ranged = [k for k in PRESET_KEYS if opts.get(k) is not None and (":" in str(opts[k]) or "," in str(opts[k]))]
    if len(ranged) != 1:
        raise ConfigError("sweep needs exactly one parameter given as start:stop:step or a list")
    key = ranged[0]
    values = parse_values(opts[key], key)
    fixed = {k: _num(opts[k], k) for k in PRESET_KEYS if k != key and opts.get(k) is not None}
    # validate the first grid point eagerly so range errors exit with status 2
    try:
        to_spin_params(preset_from_name(opts["preset"], **{**fixed, key: values[0]}))
    except ValueError as exc:
        raise ConfigError(str(exc))
    res = analysis.relative_error_curve(opts["preset"], key, values, fixed, _solver_cfg(opts),
                                        workers=opts.get("workers"))
    return io.sweep_csv(res) if opts["format"] == "csv" else io.sweep_json(res)


def cmd_validate(opts):
    results = validation.run_all(echo=None)
    rows = [(r.key, r.title, r.passed, r.detail) for r in results]
    if opts["format"] == "json":
        text = io.json_text([dict(zip(("criterion", "title", "passed", "detail"), r)) for r in rows])
    else:
        text = io.csv_text(("criterion", "title", "passed", "detail"), rows)
    return text, results


HANDLERS = {"exact": cmd_exact, "surface": cmd_surface, "kernels": cmd_kernels, "angle": cmd_angle,
            "solve": cmd_solve, "compare": cmd_compare, "sweep": cmd_sweep}


def _emit(text, opts, command):
    out = opts.get("out")
    if out is None and os.environ.get(OUTDIR_ENV):
        out = os.path.join(os.environ[OUTDIR_ENV], f"{command}.{opts['format']}")
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write output file {out}: {exc.strerror or exc}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = _merge_config(args)
        if args.command == "validate":
            text, results = cmd_validate(opts)
            for r in results:
                print(r.line(), file=sys.stderr)
            _emit(text, opts, "validate")
            return 0 if all(r.passed for r in results) else 1
        _emit(HANDLERS[args.command](opts), opts, args.command)
    except ConfigError as exc:
        print(f"spintunnel {args.command}: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Spin Hamiltonians H = A Jz + B Jz^2 + G (J+^2 + J-^2) and named presets.

Molecule presets work in Kelvin (energies are E/k_B); the Lipkin preset
works in units of the single-particle splitting epsilon.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

UNITS = ("kelvin", "epsilon")


@dataclass(frozen=True)
class SpinParams:
    """Coefficients of the operator Hamiltonian for a spin-``j`` multiplet."""

    A: float
    B: float
    G: float
    j: float
    unit: str = "epsilon"

    @property
    def N(self) -> int:
        """Dimension ``2j + 1`` of the multiplet."""
        return int(round(2 * self.j)) + 1

    @property
    def two_j(self) -> int:
        return int(round(2 * self.j))

    @property
    def is_integer_spin(self) -> bool:
        return self.two_j % 2 == 0


@dataclass(frozen=True)
class Lipkin:
    chi: float
    Ns: int


@dataclass(frozen=True)
class Mn12:
    D: float = 0.6
    S: int = 10
    h: float = 0.0


@dataclass(frozen=True)
class Fe8:
    D: float = 0.275
    E: float = 0.046
    S: int = 10


Preset = Union[Lipkin, Mn12, Fe8]


def _is_int(x) -> bool:
    return float(x) == int(round(float(x)))


def to_spin_params(p: Preset) -> SpinParams:
    """Map a named preset onto the three-coefficient Hamiltonian.

    Raises
    ------
    ValueError
        If the preset parameters are outside the range the mapping supports.
    """
    if isinstance(p, Lipkin):
        if not _is_int(p.Ns) or p.Ns < 2 or int(p.Ns) % 2:
            raise ValueError(f"Lipkin Ns must be an even integer >= 2, got {p.Ns}")
        if p.chi < 0:
            raise ValueError(f"Lipkin chi must be >= 0, got {p.chi}")
        Ns = int(p.Ns)
        return SpinParams(A=1.0, B=0.0, G=-p.chi / (2.0 * (Ns - 1)), j=Ns / 2, unit="epsilon")
    if isinstance(p, Mn12):
        if p.D <= 0:
            raise ValueError(f"Mn12 D must be positive, got {p.D}")
        if not _is_int(p.S) or p.S < 1:
            raise ValueError(f"Mn12 S must be a positive integer, got {p.S}")
        if p.h < 0:
            raise ValueError(f"Mn12 h = H_par/H_a must be >= 0, got {p.h}")
        S = int(p.S)
        # g muB H_par = 2 S D h, from H_a = 2 S D / (g muB)
        return SpinParams(A=2.0 * S * p.D * p.h, B=-p.D, G=0.0, j=S, unit="kelvin")
    if isinstance(p, Fe8):
        if p.D <= 0:
            raise ValueError(f"Fe8 D must be positive, got {p.D}")
        if not (0 < p.E < p.D):
            raise ValueError(f"Fe8 requires 0 < E < D, got E={p.E}, D={p.D}")
        if not _is_int(p.S) or p.S < 1:
            raise ValueError(f"Fe8 S must be a positive integer, got {p.S}")
        return SpinParams(A=0.0, B=-p.D, G=p.E / 2.0, j=int(p.S), unit="kelvin")
    raise TypeError(f"unknown preset type {type(p).__name__}")


def validate(p: SpinParams) -> list[str]:
    """Return human-readable invariant violations; empty when ``p`` is valid."""
    problems = []
    if not _is_int(2 * p.j):
        problems.append("2j must be an integer")
    elif p.j < 0.5:
        problems.append("j must be at least 1/2")
    for name in ("A", "B", "G"):
        v = getattr(p, name)
        if v != v or v in (float("inf"), float("-inf")):
            problems.append(f"{name} must be finite")
    if p.unit not in UNITS:
        problems.append(f"unit must be one of {UNITS}")
    return problems


def check(p: SpinParams) -> SpinParams:
    problems = validate(p)
    if problems:
        raise ValueError("invalid SpinParams: " + "; ".join(problems))
    return p


def preset_from_name(name: str, **kw) -> Preset:
    """Build a preset from its lower-case name and keyword parameters."""
    name = name.lower()
    if name == "lipkin":
        return Lipkin(chi=float(kw.get("chi", 1.0)), Ns=int(kw.get("Ns", 20)))
    if name == "mn12":
        return Mn12(D=float(kw.get("D", 0.6)), S=int(kw.get("S", 10)), h=float(kw.get("h", 0.0)))
    if name == "fe8":
        return Fe8(D=float(kw.get("D", 0.275)), E=float(kw.get("E", 0.046)), S=int(kw.get("S", 10)))
    raise ValueError(f"unknown preset {name!r}; expected lipkin, mn12 or fe8")

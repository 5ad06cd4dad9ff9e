"""Exact-arithmetic packing bounds in the unit cross-polytope."""

from .packings import PackingSet, construct, critical_radius, verify_packing
from .rational import AffR, Rat, RInterval, Verdict

__all__ = [
    "AffR",
    "PackingSet",
    "Rat",
    "RInterval",
    "Verdict",
    "construct",
    "critical_radius",
    "verify_packing",
]

__version__ = "0.1.0"

"""Locally repairable codes whose single-node repair uses only field additions.

The two addition-repair families live in :mod:`addrepair.construct`; the
Pyramid and Tamo-Barg baselines in :mod:`addrepair.baselines`; the
failure-injection comparison in :mod:`addrepair.bench`.
"""

from .core import CodeParams, LinearCode, RepairPlan, encode, repair_symbol, singleton_bound
from .field import FieldSpec, OpCounter, make_field
from .matrix import MatrixGF

__all__ = [
    "CodeParams",
    "FieldSpec",
    "LinearCode",
    "MatrixGF",
    "OpCounter",
    "RepairPlan",
    "encode",
    "make_field",
    "repair_symbol",
    "singleton_bound",
]

__version__ = "0.1.0"

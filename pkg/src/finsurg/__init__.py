"""Exact Heegaard Floer d-invariant obstructions to finite Dehn surgery.

Computes correction terms of dihedral Seifert fibered manifolds by plumbing
and of integral L-space knot surgeries, and compares the two.
"""
from .errors import (
    ConsistencyError,
    InvalidArgumentError,
    InvalidPresentationError,
    NotNegativeDefiniteError,
    ReducibleSurgeryError,
    SearchExhaustedError,
    UnsupportedShapeError,
    UnsupportedSurgeryError,
)
from .nemethi import DInvariantTable, d_table
from .numtheory import dedekind_sum, mod_inverse, reciprocity_rhs, sawtooth
from .obstruct import ObstructionReport, Verdict, evaluate, scan, unboundedness_witness
from .seifert import SeifertPresentation, classify_elliptic, dihedral_family, normalize, reverse_orientation
from .surgery import AlexanderPoly, SurgerySpec, TorusKnot, d_bounds, lens_d, surgery_d

__version__ = "0.1.0"

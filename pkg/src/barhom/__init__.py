"""Exact-arithmetic controlled chain homotopies in Moore complexes of
simplicial classifying spaces, with diameter tables and bound constants."""

from .groups import CyclicGroup, DirectProduct, FreeGroup, Group, SymmetricGroup
from .moore import (
    Chain,
    boundary,
    count_degenerate,
    degeneracy,
    diameter,
    face,
    is_degenerate,
    project,
)
from .quintuple import NonNormalizable, Quintuple, QuintupleAlgebra, VerificationInstance, instance_eval
from .shuffles import Shuffle, aw, ed_terms, edgewise, edgewise_composite, ez, mult_map, shuffle_term, shuffles
from .cylinder import CylinderTerm, IncompatiblePillars, boundary_system, cyl, cyl_chain, face_pillar
from .homotopy import (
    DimensionExceeded,
    HomotopyContext,
    MitosisTower,
    PartialHomotopy,
    formal_context,
    homotopy_P,
    induct_Q,
    instance_context,
    mitosis_context,
    phi,
    pillar_of_term,
    psi,
    verify_identity,
)
from .words import MitosisWord, TowerAlgebra, mitosis_reduce
from . import bounds

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

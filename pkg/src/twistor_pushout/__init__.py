"""Exact intersection theory for glued pairs of blown-up twistor spaces.

The package computes, over the integers and Gaussian rationals with no
floating point anywhere: table-presented graded intersection rings and their
maps; the blow-up of a twistor threefold along a twistor line; the matched
pair lattices of the normal-crossing union of two such blow-ups, with
componentwise products; the rigid classification of surfaces gluing across
the double locus; Chern-class and charge bookkeeping for glued bundles; the
fixed-phase circle bundle of the local model t = uv with its lens-space
quotients; and the fixed-point-free real structure of the quadric.
"""

__version__ = "0.1.0"

from .charges import (
    CentralFibreCycle,
    GluedBundleData,
    glued_c2_cycle,
    obstruction_dim,
    polarized_charge,
    practical_lift,
    specialize,
)
from .gaussian import GaussianScalar
from .neck import kn_fixed_phase_bundle, lens_space_of, phase_decoration, phase_solve
from .pushout import (
    BlownUpChow,
    ComponentPair,
    EqualizerRing,
    PushoutPair,
    TwistorChow,
    blow_up,
    builtin_base,
    flag_threefold_base,
    projective_space_base,
)
from .quadric import Bidegree, QuadricClass, quadric_ring
from .rings import GradedMap, GradedRing, RingElement, kernel_lattice, lattice_membership
from .surfaces import SurfaceData, classify_all, glue_check, trace_class

__all__ = [
    "Bidegree",
    "BlownUpChow",
    "CentralFibreCycle",
    "ComponentPair",
    "EqualizerRing",
    "GaussianScalar",
    "GluedBundleData",
    "GradedMap",
    "GradedRing",
    "PushoutPair",
    "QuadricClass",
    "RingElement",
    "SurfaceData",
    "TwistorChow",
    "blow_up",
    "builtin_base",
    "classify_all",
    "flag_threefold_base",
    "glue_check",
    "glued_c2_cycle",
    "kernel_lattice",
    "kn_fixed_phase_bundle",
    "lattice_membership",
    "lens_space_of",
    "obstruction_dim",
    "phase_decoration",
    "phase_solve",
    "polarized_charge",
    "practical_lift",
    "projective_space_base",
    "quadric_ring",
    "specialize",
    "trace_class",
    "__version__",
]

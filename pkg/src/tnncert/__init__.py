"""Exact total non-negativity testing and certification for the
change-of-basis matrices M_{e->a} between Newton-type polynomial bases."""

from .builder import (
    FamilySpec,
    build_matrix,
    entry_by_subset_sum,
    entry_by_symmetric_polys,
    family_sequences,
)
from .certify import (
    NOT_TNN,
    TNN,
    Certificate,
    NegativeMinorWitness,
    certify,
    extract_negative_minor,
    fast_certificate_from_rg,
)
from .core import CobMatrix, InputError, MinorSpec, SequencePair, SizeGuardError, TNNError, det, minor
from .growth import RgReport, TraceStep, rg_check, rg_check_monotone
from .network import (
    PathSystem,
    PivotError,
    TriangleInstance,
    WeightArray,
    build_array,
    enumerate_disjoint_path_systems,
    path_matrix,
    pivot,
    triangle_decompose,
)
from .oracle import all_minors_tnn, ando_tnn

__version__ = "0.1.0"

"""Exact spectra, isometry and isospectrality of orbifold lens spaces."""

from .classes import (
    CanonicalClass,
    LensTuple,
    canonicalize,
    closed_form_bound,
    complement_w,
    enumerate_classes,
    is_isometric,
    lower_bound,
    orbit_bound,
)
from .geometry import SingularSignature, StratumRecord, singular_signature
from .residues import ResidueSystem, build_system, character_sum, fold
from .search import (
    ExpressionPattern,
    IsospectralFamily,
    SufficiencyRecord,
    find_families,
    pattern,
    pattern_bound,
    realized_pattern_count,
    sufficiency_check,
)
from .spectra import (
    CharacterPolynomial,
    IsospectralityCertificate,
    MultiplicitySequence,
    SpectralInvariant,
    character_polynomial,
    extend_w,
    is_isospectral,
    multiplicity,
    multiplicity_sequence,
    series_depth,
    spectral_invariant,
    spectrum,
)

__version__ = "0.1.0"

"""Tutte-coefficient tests for (k, l)-uniform and almost (k, l)-uniform matroids."""

from .activity import (
    ActivityPair,
    activity_pair,
    external_activity,
    fundamental_circuit,
    fundamental_cocircuit,
    gale_smallest_basis,
    internal_activity,
)
from .constructors import (
    SchubertSpec,
    free_plus_loops,
    lattice_path_activity,
    schubert,
    excluded_minor_construct,
    uniform,
)
from .formats import parse_matroid, parse_revlex, read_matroid, to_revlex, to_text, write_matroid
from .isominor import automorphism_count, find_minor, has_minor, is_isomorphic
from .matroid import Matroid, direct_sum, from_bases
from .tutte import (
    TuttePolynomial,
    coefficient,
    tutte,
    tutte_by_activities,
    tutte_by_deletion_contraction,
    vanishes_at_or_above,
    vanishes_strictly_above,
)
from .uniformity import (
    KLPair,
    UniformityProfile,
    is_almost_kl_uniform,
    is_almost_kl_uniform_def,
    is_almost_kl_uniform_tutte,
    is_excluded_minor,
    is_excluded_minor_def,
    is_excluded_minor_tutte,
    is_kl_uniform,
    is_kl_uniform_flats,
    is_kl_uniform_minor,
    is_kl_uniform_tutte,
    is_paving,
    uniformity_profile,
)

__version__ = "0.1.0"

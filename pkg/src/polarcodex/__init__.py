"""Homological invariants of polarized ideals of combinatorial neural codes."""

from .betti import (
    BettiTable,
    InvariantPair,
    betti_hochster,
    betti_lcm,
    betti_taylor,
    invariants,
)
from .codes import (
    Codeword,
    NeuralCode,
    canonical_orbit_rep,
    complement_code,
    complement_word,
    constant_extension,
    free_extension,
    is_nondegenerate,
    subcube,
)
from .complexes import (
    SimplicialComplex,
    boundary_sphere,
    induced,
    is_connected,
    minimal_nonfaces,
    simplicial_code,
    stacked_sphere,
    stanley_reisner_complex,
)
from .constructions import (
    Realization,
    RealizationRequest,
    code_all_or_nothing,
    code_antipodal_pair,
    code_band,
    code_minus_antipodal,
    code_pd0,
    code_pd1,
    code_reg1,
    code_reg2,
    code_reg3,
    realize,
)
from .explorer import RegionReport, TheoremReport, enumerate_region, verify_theorems
from .homology import FieldSpec, HomologyProfile, matrix_rank, reduced_homology
from .ideal import (
    CanonicalForm,
    PMType,
    PseudoMonomial,
    SquarefreeIdeal,
    SquarefreeMonomial,
    canonical_form,
    char_pseudomonomial,
    classify_type,
    minimalize,
    pm_in_ideal,
    polarize,
    polarized_ideal,
)
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

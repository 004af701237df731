"""g-vector fans of skew-symmetrizable matrices in exact arithmetic."""

__version__ = "0.1.0"

from .errors import (
    BudgetExceeded,
    ConeStraddlesWall,
    FiniteTypeNoLimit,
    GFanError,
    InvalidInput,
    InvariantViolation,
    NonSkewSymmetrizable,
    RaysDependent,
)
from .fan import Fan, SimplicialCone, build_fan, check_complete, contains_point, lattice_cover
from .gvec import GVectorSeed, enumerate_seeds, initial_seed, mutate_seed
from .matrix import (
    ExchangeMatrix,
    ExtendedMatrix,
    FiniteTypeVerdict,
    decide_finite_type,
    find_skew_symmetrizer,
    mutate_matrix,
)
from .quadratic import QuadraticNumber
from .rank2 import Rank2Params, badlands_lattice_point, limiting_slopes, rank2_fan
from .transition import TransitionMap, apply_transition, transport_fan, transport_point_along_path
from .witness import WitnessCertificate, find_witness, verify_witness

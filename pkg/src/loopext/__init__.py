"""Linear abelian extensions of finite abelian groups by finite loops.

The package builds loops F(P, Q) on L x A from a loop L, an abelian group A
and a cocycle (P, Q) of automorphism pairs, checks the closed-form conditions
equivalent to commutativity and the left/right/full inverse properties of the
extension, generates such cocycles from seeds, and decides which loop orders
admit strongly linear inverse-property extensions.
"""

from .abelian import (
    AbelianGroup,
    Automorphism,
    AutomorphismGroup,
    DEFAULT_SIZE_CAP,
    compose,
    enumerate_automorphisms,
    identity_automorphism,
    invert,
    make_group,
    parse_group_spec,
)
from .cardinality import (
    CardinalityCertificate,
    cross_check_orbit_count,
    enumerate_feasible,
    feasible_cardinality,
)
from .constructions import (
    ChoiceSource,
    construct_ip_cocycle,
    construct_lip_cocycle,
    construct_pq,
    construct_rip_cocycle,
    ip_cocycle_from_choices,
    random_cocycle,
)
from .extension import (
    ExtensionLoop,
    InverseCoincidenceData,
    LoopCocycle,
    build_extension,
    check_cip,
    check_equivariance,
    check_ip_conditions,
    check_lip_conditions,
    check_rip_conditions,
    extension_left_inverse,
    extension_right_inverse,
    is_commutative_extension,
    is_strongly_linear,
    make_cocycle,
    opposite_cocycle,
)
from .loops import (
    FiniteLoop,
    LoopPropertyReport,
    analyze_properties,
    is_normal_subloop,
    make_loop,
    opposite_loop,
    quotient_loop,
)
from .orbits import (
    GAMMA,
    OrbitDecomposition,
    PairOrbit,
    PairSymmetry,
    SigmaSet,
    act_on_pair,
    gamma_orbit,
    gamma_orbits,
    phi_orbits,
    psi_orbits,
    sigma_set,
)

__version__ = "0.1.0"

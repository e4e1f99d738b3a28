"""GKM graphs, axial functions and equivariant cohomology of homogeneous spaces G/K."""

from .axial import (
    AxialFunction,
    AxialReport,
    Section,
    axial_value,
    check_acs_condition,
    enumerate_sections,
    verify_axial,
)
from .cohomology import (
    GKMClass,
    NotInvariantError,
    borel_map,
    gkm_membership,
    is_invariant,
    symmetrize,
    weyl_act_class,
    weyl_act_poly,
)
from .gkmgraph import GKMGraph, OrientedEdge, build_graph, connection, euler_characteristic, is_simple
from .morse import (
    IrregularCovectorError,
    MorseAssignment,
    Orientation,
    betti,
    betti_invariance,
    chamber_representatives,
    closure_oracle,
    find_morse,
    geometric_morse,
    index,
    integrable_chamber,
    is_integrable,
    random_regular_covectors,
    upward_cycle,
)
from .polynomial import Polynomial, linear_form
from .rootsystem import (
    CartanDatum,
    RootSystem,
    Subsystem,
    SubsystemClosureWarning,
    build_root_system,
    is_positive,
    root_class,
)
from .weyl import CosetSpace, WeylElement, WeylGroup, cosets, generate_weyl, subgroup_from

__version__ = "0.1.0"

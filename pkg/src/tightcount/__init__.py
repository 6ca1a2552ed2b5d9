"""Combinatorial calculus of tight contact structures.

Farey slopes and negative continued fractions, Legendrian unknot invariants,
dividing sets and bypass moves, closed-form counts of tight structures on
solid tori and lens spaces, and the state traversal that recovers the solid
torus counts by brute force.
"""

from .classify import (
    BlockDecomposition,
    HalfEulerClass,
    TightDecoration,
    block_decompose,
    decoration_half_euler,
    enumerate_tight_decorations,
    half_euler,
    lens_count_formula,
    lens_gluing_matrix,
    solid_torus_count_formula,
)
from .dividing_sets import (
    AnnulusDiagram,
    DisallowedBypass,
    DiskDiagram,
    TorusDividingSet,
    annulus_boundary_parallel,
    boundary_parallel_chords,
    disk_bypass_move,
    enumerate_disk_diagrams,
    std_nbhd_slope,
    torus_attach_bypass,
    twisting_from_intersections,
)
from .farey import (
    INFINITY,
    ContinuedFraction,
    Slope,
    bypass_slope,
    cf_expand,
    cf_to_slope,
    farey_det,
    is_farey_edge,
    make_slope,
    parse_slope,
    peel_path,
)
from .legendrian import (
    FrontCounts,
    UnknotForm,
    bennequin_check,
    front_r,
    front_tb,
    stabilize,
    surgery_rotation_tuples,
    unknot_from_invariants,
)
from .state_traversal import (
    SolidTorusProblem,
    SphereAssembly,
    StateGraph,
    assemble_sphere,
    build_state_graph,
    export_graph,
    is_potentially_allowable,
    tight_count_traversal,
    transition_exists,
)

__version__ = "0.1.0"

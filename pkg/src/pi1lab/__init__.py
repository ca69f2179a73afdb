"""pi1lab: exact-arithmetic loop classification on a planar triangle bouquet
X and its segment compactification Y, with machine-checkable certificates
that the loop-space topologies of their fundamental groups differ.
"""

from .geometry import (
    ExactDistance,
    ExactnessError,
    PLPath,
    Point2,
    Rational,
    Segment,
    evaluate,
    hausdorff_distance_sq,
    pl_path,
    point,
    point_segment_distance_sq,
    rat,
    segment,
    segments_intersect,
    sup_distance,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .loops import (
    Excursion,
    Loop,
    concatenate,
    concatenate_all,
    constant_loop,
    decompose,
    include_in_y,
    loop_from_breakpoints,
    realize_word,
    reparametrize,
    reverse,
    standard_f,
    standard_fn,
    transplant,
    validate,
    winding_degree,
)
from .pi1 import (
    HomotopyClass,
    alpha_decorate,
    choose_n,
    classify,
    classify_x,
    classify_y,
    collapse_to_x,
    collapse_with_certificate,
    induced_map,
    loop_in_ball,
    probe_discreteness_x,
    probe_isomorphism_roundtrip,
    probe_nondiscreteness_y,
    probe_slsc_y,
    random_reduced_word,
    stability_radius,
)
from .report import ProbeReport
from .spaces import (
    ComponentId,
    Membership,
    SpaceHandle,
    SpaceKind,
    WidthProfile,
    bouquet_x,
    build_circle,
    compact_y,
    component_of,
    default_x,
    default_y,
    hausdorff_convergence,
    membership,
    profile_by_name,
    verify_disjointness,
)
from .words import (
    IDENTITY,
    Word,
    format_word,
    generator,
    invert,
    multiply,
    parse_word,
    reduce_letters,
)

__version__ = "0.1.0"

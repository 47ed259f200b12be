"""Exact tools for set-theoretic n-simplex relations on finite color sets.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (  # noqa: F401
    Character,
    Cocycle,
    FormatError,
    InvariantViolation,
    MonomialOperator,
    Potential,
    ResidueColorSet,
    ResourceLimitError,
    RMap,
    SingularInput,
    __version__,
    absolutely_incoming_faces,
    absolutely_outgoing_faces,
    characters,
    check_cocycle,
    check_qte,
    classify_subface,
    coboundary_of,
    electric_cocycles,
    electric_rmap,
    enumerate_faces,
    face_order,
    fixed_point_obstruction,
    gauge_equivalent,
    homology,
    nontriviality,
    permutation_operator,
    propagate,
    reduced_form_z25,
    reduced_form_z8,
    run_reference_pipelines,
    solve_coboundary,
    twisted_operator,
    verify,
    verify_d_squared,
)

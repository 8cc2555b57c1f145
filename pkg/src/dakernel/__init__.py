"""Exact computer algebra for difference rings with a finite group action.

Main entry points::

    from dakernel import make_group, make_field, fun_of, DiffRing, DiffIdeal
    from dakernel import solve_points, nullstellensatz_check, to_adjoint
"""

from .adjoint import from_adjoint, taylor_hom, to_adjoint, transfer_point, untransfer_point
from .coeff import Field, extend, field_inverse, frobenius, make_field
from .diffideal import (
    ComponentIdeal,
    DiffIdeal,
    UnsupportedInput,
    closure_gens,
    diff_dimension,
    diff_radical,
    is_pseudomaximal,
    is_pseudoprime,
    open_basis_intersection,
    sigma_image_ideal,
    underscore_sigma,
)
from .diffpoly import DiffPoly, DiffRing, act_poly, eval_poly, make_diff_ring
from .finitering import (
    FiniteDiffRing,
    enumerate_ideals,
    make_finite_ring,
    pseudo_spectrum,
    verify_pseudoprime_props,
)
from .groebner import (
    GREVLEX,
    LEX,
    Ideal,
    MonomialOrder,
    PolyRing,
    eliminate,
    groebner_basis,
    intersect_ideals,
    krull_dimension,
    normal_form,
    radical_membership,
    saturate,
    zero_dim_radical,
)
from .group import Group, GroupElem, compose, cyclic, inverse, make_group
from .parser import ParseError, Session, load_session, parse_session
from .pseudofield import (
    Pseudofield,
    fun_of,
    gamma_eval,
    make_product_pseudofield,
    pseudo_inverse,
    sigma_act,
    taylor_normalize,
)
from .variety import (
    LocalFractionDatum,
    PointSet,
    glue_regular,
    ideal_of_points,
    nullstellensatz_check,
    pseudoregular_to_regular,
    solve_points,
)

__version__ = "0.1.0"

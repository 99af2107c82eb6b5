"""Betti, weight and mixed Hodge numbers of compactified Jacobians of nodal curves."""

from .closed_form import (
    ClosedFormParams,
    betti_closed,
    binom,
    hodge_closed_corrected,
    hodge_closed_printed,
    weight_closed_corrected,
    weight_closed_printed,
)
from .mhs_core import (
    HodgePiece,
    MixedHodgeTable,
    betti,
    compactified_jacobian_table,
    direct_sum,
    e_polynomial,
    hodge_number,
    jacobian_table,
    nodal_rational_table,
    poincare_polynomial,
    power,
    tate_twist,
    tensor,
    unit_table,
    weight_dim,
)
from .oracle.census import CensusCapExceeded, kunneth_basis_census

__version__ = "0.1.0"

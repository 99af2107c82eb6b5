"""Independent brute-force checks: basis census and chain-complex homology."""

from .census import CensusCapExceeded, GeneratorChoice, kunneth_basis_census
from .chains import (
    ChainComplex,
    ComplexSizeExceeded,
    cw_nodal_rational,
    cw_torus,
    homology_betti,
    kunneth_check,
    tensor_complex,
)

"""Socle modules of powers of monomial ideals."""
from .monomial import (
    DimensionMismatchError,
    DomainError,
    MonomialIdeal,
    Ring,
    UnsupportedInputError,
    colon_ideal,
    colon_maximal,
    colon_monomial,
    contains,
    intersect,
    minimalize,
    multiply,
    power,
)
from .socle import (
    SocleBasis,
    Verdict,
    analytic_spread,
    degree_profile,
    socle_basis,
    socle_module_mingens,
    soc_ideal,
)
from .graphs import SimpleGraph, edge_ideal
from .polymatroid import PlpType, VeroneseType

__version__ = "0.1.0"

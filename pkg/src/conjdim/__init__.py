"""Exact constructions and certificates for algebraic numbers whose
conjugates span a Q-vector space (or multiplicative group) of prescribed
dimension.

The package is organized bottom-up: exact arithmetic (rat, unipoly,
numberfield, multipoly), elimination machinery (resultants, symmetric,
modfactor, sturm), reflection groups and their invariants (groups,
invariants), the constructions themselves (constructor, sqrttower),
numeric verification (lll, dimension), reference bounds (tables), and the
positive-characteristic analogue (finitefield).  The command-line entry
point lives in cli.
"""

__version__ = "0.1.0"

from .numberfield import QQ, NFElem, NumberField, cyclotomic_field, nf_make
from .unipoly import UniPoly, poly_from_int_list
from .tables import D_cyc, D_finite, check_bounds, d_max

__all__ = [
    "__version__",
    "QQ",
    "NFElem",
    "NumberField",
    "cyclotomic_field",
    "nf_make",
    "UniPoly",
    "poly_from_int_list",
    "D_cyc",
    "D_finite",
    "check_bounds",
    "d_max",
]

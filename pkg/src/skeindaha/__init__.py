"""skeindaha: exact computer algebra for curve operators on the
twice-punctured torus and their cluster-algebra shadow.

Everything is exact (Gaussian-rational coefficients, q^(1/4) carried as the
variable u); every identity check in the verification suites is an exact
zero test.
"""

from .laurent import CLUSTER, KRING, OP, SKEIN_A, Context, LaurentPoly
from .qdiff import Operator, make_G, make_K, make_W, op_linear
from .ratfn import RationalFn
from .scalars import Scalar

__version__ = "0.1.0"

__all__ = [
    "CLUSTER",
    "KRING",
    "OP",
    "SKEIN_A",
    "Context",
    "LaurentPoly",
    "Operator",
    "RationalFn",
    "Scalar",
    "make_G",
    "make_K",
    "make_W",
    "op_linear",
    "__version__",
]

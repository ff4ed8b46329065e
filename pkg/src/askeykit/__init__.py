"""askeykit: orthogonal polynomial families of the (q-)Askey scheme plus a
mechanically verified catalog of identities between them."""

__version__ = "0.1.0"

from .numerics import Tol, TolerancePolicy, policy  # noqa: F401
from .scalars import GaussianRational, Rational  # noqa: F401

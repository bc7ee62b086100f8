"""Box polynomials, their operator calculus, constrained set-partition counts,
the fast Fourier delta operator, the excedance matrix and root localization."""

__version__ = "0.1.0"

from ._kernels import BACKEND  # noqa: F401

from .de import integrate_de
from .differentiation import DerivativeChain, differentiate_param
from .integrand import IntegrandSpec
from .oscillatory import integrate_oscillatory, j0_zero, zero_panels

__all__ = (
    "DerivativeChain",
    "IntegrandSpec",
    "differentiate_param",
    "integrate_de",
    "integrate_oscillatory",
    "j0_zero",
    "zero_panels",
)

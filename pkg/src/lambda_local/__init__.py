"""Exact local constants and lambda-functions for p-adic fields."""

from .cyclo import CycloNumber, Mu4, root_of_unity, snap_fourth_root, sqrt_prime
from .epsilon import EpsilonResult, check_functional_equation, deligne_constant, local_constant
from .errors import LambdaLocalError
from .ffield import FiniteField, gauss_sum_bruteforce, gauss_sum_closed_form
from .groups import FiniteGroup, catalog_group, classify_sylow2, delta_sign_character, sylow2
from .lambdas import DispatchContext, LambdaValue, lambda_dispatch
from .padic import AddChar, ExtensionDescriptor, LocalField, MultChar

__version__ = "0.1.0"

__all__ = [
    "AddChar",
    "CycloNumber",
    "DispatchContext",
    "EpsilonResult",
    "ExtensionDescriptor",
    "FiniteField",
    "FiniteGroup",
    "LambdaLocalError",
    "LambdaValue",
    "LocalField",
    "Mu4",
    "MultChar",
    "catalog_group",
    "check_functional_equation",
    "classify_sylow2",
    "deligne_constant",
    "delta_sign_character",
    "gauss_sum_bruteforce",
    "gauss_sum_closed_form",
    "lambda_dispatch",
    "local_constant",
    "root_of_unity",
    "snap_fourth_root",
    "sqrt_prime",
    "sylow2",
]

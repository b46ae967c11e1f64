"""Exact Jacobi polynomials, harmonic weight enumerators and t-design checks
for first-order Reed-Muller and extended Hamming codes."""

from .errors import CapacityError, InputError, VerificationError
from .gf2code import BinaryCode, BlockSet, dual, extended_hamming, make_code, reed_muller_1
from .poly import Poly4

__all__ = [
    "BinaryCode", "BlockSet", "CapacityError", "InputError", "Poly4", "VerificationError",
    "dual", "extended_hamming", "make_code", "reed_muller_1",
]
__version__ = "0.1.0"

"""r-variable Kostka-Shoji polynomials and independent checks on them."""

__version__ = "0.1.0"

from .polyring import GradedLaurent, TPoly, specialize_diagonal
from .multipartitions import Multipartition, diff_alpha, dominates, enumerate_multipartitions, rho
from .pseudoroots import build_system, partition_function, partition_function_single
from .kostka import KostkaResult, kostka, kostka_single, kostka_table

__all__ = [
    "GradedLaurent", "TPoly", "specialize_diagonal",
    "Multipartition", "diff_alpha", "dominates", "enumerate_multipartitions", "rho",
    "build_system", "partition_function", "partition_function_single",
    "KostkaResult", "kostka", "kostka_single", "kostka_table",
]

"""Exact computation and verification of recurrences for binomial sums
sum_h C(n, floor((n + m h + l) / k)) z^h in terms of generalized Fibonacci
and Lucas polynomials."""

from .binsum import SumSpec, a_row, a_sum, cyclic_walks, strip_paths
from .charrec import (CharPoly, annihilates, charpoly_general, charpoly_k2,
                      charpoly_simple, subseq_charpoly)
from .fibpoly import fib, fib_k, g_k, h_k, lucas, lucas_k
from .polycore import MPoly, UPoly, binom, floor_div
from .symfun import b_coeffs, dangelo_f, elem_sym, p_sym, phi_product

__version__ = "0.1.0"

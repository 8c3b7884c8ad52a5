"""Exact evaluation and verification of half-binomial sums over generalized
Fibonacci and Lucas sequences."""
from .exactmath import QuadElem, binom, format_value, quad_inv, quad_mul, quad_norm, quad_pow
from .sequences import SeqPair, SeqParams, seq_pair_fastdouble, seq_u, seq_v
from .halfsum import f_closed, f_direct, half_sum
from .identities import IdentityId, IdentityReport, evaluate, verify_grid

__version__ = "0.1.0"

"""Fibonacci infinite word: word families, factorization algorithms and
mechanical checks of its product factorizations."""

from .factorize import (
    Factorization,
    crochemore_factorize,
    lyndon_factorize,
    lz_factorize,
    occurrence_positions,
)
from .identities import (
    catalog,
    deluca_minimality_check,
    lucas_lengths,
    verify_algorithmic_match,
    verify_identity,
)
from .numeration import fib, from_zeckendorf, parity_bit, zeck_enumerate, zeckendorf
from .sturmian import Directives, slope, standard_sequence, sturmian_stream
from .words import (
    WordStream,
    central_word,
    christoffel_lower,
    christoffel_path,
    christoffel_upper,
    cofibonacci_word,
    fibonacci_stream,
    fibonacci_word,
    is_lyndon,
    singular_word,
)

__version__ = "0.1.0"

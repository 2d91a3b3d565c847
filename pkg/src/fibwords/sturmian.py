"""Standard sequences and standard Sturmian words from directive sequences.

With directives d_1, d_2, ... the standard sequence is s_1 = 1, s_2 = 0,
s_n = s_{n-1}^{d_{n-2}} s_{n-2}; it converges to the standard Sturmian
word whose slope has continued fraction [0; d_1 + 1, d_2, d_3, ...].
All-ones directives give the Fibonacci word.
"""

import itertools
import math
from fractions import Fraction

from .words import WordStream

__all__ = [
    "Directives",
    "standard_sequence",
    "sturmian_stream",
    "slope",
    "slope_error_bound",
    "FIBONACCI_SLOPE",
]

FIBONACCI_SLOPE = (3 - math.sqrt(5)) / 2


class Directives:
    """Positive integers d_1, d_2, ... (1-based).

    A finite list is an error to run past unless ``cycle=True``, in which
    case it repeats forever.
    """

    def __init__(self, values, cycle=False):
        values = tuple(values)
        if not values:
            raise ValueError("at least one directive is required")
        for d in values:
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"directives must be integers >= 1, got {d!r}")
        self.values = values
        self.cycle = cycle

    @classmethod
    def parse(cls, text, cycle=False):
        try:
            values = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError:
            raise ValueError(f"malformed directive list {text!r}") from None
        return cls(values, cycle=cycle)

    def __getitem__(self, i):
        if i < 1:
            raise IndexError(f"directives are indexed from 1, got {i}")
        if i <= len(self.values):
            return self.values[i - 1]
        if self.cycle:
            return self.values[(i - 1) % len(self.values)]
        raise IndexError(
            f"directive d_{i} requested but only {len(self.values)} given (use cycle=True)"
        )

    def __iter__(self):
        if self.cycle:
            return itertools.cycle(self.values)
        return iter(self.values)

    def __repr__(self):
        return f"Directives({list(self.values)}, cycle={self.cycle})"


def _as_directives(dirs):
    return dirs if isinstance(dirs, Directives) else Directives(dirs)


def standard_sequence(dirs, n):
    """s_n for the given directives."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"standard sequence index must be >= 1, got {n!r}")
    dirs = _as_directives(dirs)
    if n == 1:
        return "1"
    prev, cur = "1", "0"
    for m in range(3, n + 1):
        prev, cur = cur, cur * dirs[m - 2] + prev
    return cur


def _sturmian_chunks(dirs):
    # s_{n} = s_{n-1}^{d} s_{n-2} extends s_{n-1} by s_{n-1}^{d-1} s_{n-2}
    prev, cur = "1", "0"
    yield cur
    m = 3
    while True:
        try:
            d = dirs[m - 2]
        except IndexError as exc:
            raise ValueError(str(exc)) from None
        piece = cur * (d - 1) + prev
        yield piece
        prev, cur = cur, cur + piece
        m += 1


def sturmian_stream(dirs):
    """The standard Sturmian word as a :class:`WordStream`."""
    return WordStream(_sturmian_chunks(_as_directives(dirs)))


def slope(dirs, depth):
    """Exact value of [0; d_1 + 1, d_2, ..., d_depth]."""
    if not isinstance(depth, int) or depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth!r}")
    dirs = _as_directives(dirs)
    terms = [dirs[1] + 1] + [dirs[i] for i in range(2, depth + 1)]
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return 1 / value


def slope_error_bound(dirs, depth):
    """Upper bound on |slope - slope(dirs, depth)|, namely 1/(q_k q_{k+1}).

    Needs directive d_{depth+1}.
    """
    q = slope(dirs, depth).denominator
    q_next = slope(dirs, depth + 1).denominator
    return Fraction(1, q * q_next)

"""Finite Fibonacci-related words, the infinite Fibonacci word, and the
elementary operators used to build them.

Words are plain ``str`` objects over the ASCII letters '0' and '1'.
"""

import threading
from dataclasses import dataclass

from .numeration import fib

__all__ = [
    "check_word",
    "complement",
    "reverse",
    "rotate_left",
    "rotate_right",
    "complement_first",
    "fibonacci_word",
    "central_word",
    "cofibonacci_word",
    "singular_word",
    "christoffel_lower",
    "christoffel_upper",
    "is_lyndon",
    "WordStream",
    "fibonacci_stream",
    "LatticePath",
    "christoffel_path",
    "segment_end",
]

_FLIP = str.maketrans("01", "10")


def check_word(w):
    """Return ``w`` with surrounding whitespace removed, or raise ValueError."""
    w = w.strip()
    bad = next((c for c in w if c not in "01"), None)
    if bad is not None:
        raise ValueError(f"invalid symbol {bad!r} in word {w!r}")
    return w


def complement(w):
    return w.translate(_FLIP)


def reverse(w):
    return w[::-1]


def _nonempty(w, op):
    if not w:
        raise ValueError(f"{op} needs a non-empty word")


def rotate_left(w):
    """``w_1...w_n -> w_n w_1 ... w_{n-1}`` (last letter moves to the front)."""
    _nonempty(w, "rotate_left")
    return w[-1] + w[:-1]


def rotate_right(w):
    """``w_1...w_n -> w_2 ... w_n w_1`` (first letter moves to the back)."""
    _nonempty(w, "rotate_right")
    return w[1:] + w[0]


def complement_first(w):
    _nonempty(w, "complement_first")
    return complement(w[0]) + w[1:]


def _check_index(n, least, what):
    if not isinstance(n, int) or n < least:
        raise ValueError(f"{what} index must be >= {least}, got {n!r}")


_FIB_WORDS = ["", "1", "0"]
_FIB_WORDS_LOCK = threading.Lock()


def fibonacci_word(n):
    """f_1 = 1, f_2 = 0, f_n = f_{n-1} f_{n-2}."""
    _check_index(n, 1, "Fibonacci word")
    words = _FIB_WORDS
    if len(words) <= n:
        with _FIB_WORDS_LOCK:
            while len(words) <= n:
                words.append(words[-1] + words[-2])
    return words[n]


def central_word(n):
    """Palindromic prefix p_n: f_n without its last two letters."""
    _check_index(n, 3, "central word")
    return fibonacci_word(n)[:-2]


def cofibonacci_word(n):
    """f'_n: f_n with its last two letters exchanged."""
    _check_index(n, 3, "co-Fibonacci word")
    f = fibonacci_word(n)
    return f[:-2] + f[-1] + f[-2]


def singular_word(n):
    """Left rotation of f_n with the first letter complemented."""
    _check_index(n, 1, "singular word")
    return complement_first(rotate_left(fibonacci_word(n)))


def christoffel_lower(n):
    """c_n = 0 p_n 1."""
    _check_index(n, 3, "Christoffel word")
    return "0" + central_word(n) + "1"


def christoffel_upper(n):
    """1 p_n 0, the reversal of :func:`christoffel_lower`."""
    _check_index(n, 3, "Christoffel word")
    return "1" + central_word(n) + "0"


def is_lyndon(w, order="01"):
    """True iff ``w`` is strictly smaller than each of its proper suffixes.

    ``order`` lists the alphabet from smallest to largest: "01" means 0 < 1,
    "10" means 1 < 0.
    """
    if not w:
        raise ValueError("is_lyndon needs a non-empty word")
    if order == "10":
        w = complement(w)
    elif order != "01":
        raise ValueError(f"order must be '01' or '10', got {order!r}")
    return all(w < w[i:] for i in range(1, len(w)))


class WordStream:
    """Pull-based, unbounded source of binary symbols.

    ``chunks`` is an iterator yielding successive non-empty pieces of the
    word. Symbols pulled with ``next()`` are consumed in order; ``take(k)``
    always returns the length-k prefix from the very start and does not
    move the read position. Not safe to share between threads.
    """

    def __init__(self, chunks):
        self._chunks = iter(chunks)
        self._parts = []
        self._buffer = ""
        self._pos = 0

    def _fill(self, k):
        if len(self._buffer) >= k:
            return
        parts = self._parts
        have = len(self._buffer)
        while have < k:
            try:
                piece = next(self._chunks)
            except StopIteration:
                raise ValueError(
                    f"stream ended after {have} symbols, {k} requested"
                ) from None
            parts.append(piece)
            have += len(piece)
        self._buffer += "".join(parts)
        parts.clear()

    def take(self, k):
        if k < 0:
            raise ValueError(f"prefix length must be >= 0, got {k}")
        self._fill(k)
        return self._buffer[:k]

    def __iter__(self):
        return self

    def __next__(self):
        self._fill(self._pos + 1)
        c = self._buffer[self._pos]
        self._pos += 1
        return c


def _fibonacci_chunks():
    # f_{n+1} = f_n f_{n-1}: each step appends the previous word
    prev, cur = "1", "0"
    yield cur
    while True:
        yield prev
        prev, cur = cur, cur + prev


def fibonacci_stream():
    """The Fibonacci infinite word f = 0100101001001..."""
    return WordStream(_fibonacci_chunks())


@dataclass(frozen=True)
class LatticePath:
    """Grid points from (0, 0); '0' steps right, '1' steps up."""

    points: tuple

    @classmethod
    def from_word(cls, w):
        x = y = 0
        pts = [(0, 0)]
        for c in w:
            if c == "0":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return cls(tuple(pts))

    @property
    def end(self):
        return self.points[-1]

    def word(self):
        return "".join(
            "0" if b[0] > a[0] else "1" for a, b in zip(self.points, self.points[1:])
        )

    def __len__(self):
        return len(self.points) - 1


def christoffel_path(n, kind="lower"):
    """Lattice path of a Christoffel word, ending at (F_{n-1}, F_{n-2})."""
    if kind == "lower":
        w = christoffel_lower(n)
    elif kind == "upper":
        w = christoffel_upper(n)
    else:
        raise ValueError(f"kind must be 'lower' or 'upper', got {kind!r}")
    return LatticePath.from_word(w)


def segment_end(n):
    """Endpoint (F_{n-1}, F_{n-2}) of the segment approximated by c_n."""
    _check_index(n, 3, "Christoffel word")
    return fib(n - 1), fib(n - 2)

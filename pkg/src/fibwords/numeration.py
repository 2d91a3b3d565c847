"""Fibonacci numbers and the Zeckendorf numeration system.

Zeckendorf representations are strings of ASCII '0'/'1', most significant
bit first. The i-th bit from the right (counting from 1) stands for
F_{i+1}, so F_1 never appears. Zero is the empty string.
"""

import threading

__all__ = [
    "fib",
    "fib_sum_identity",
    "zeckendorf",
    "from_zeckendorf",
    "parity_bit",
    "zeck_enumerate",
    "render_zeck",
]

# Append-only; readers only ever see a fully built prefix.
_FIB = [0, 1, 1]
_FIB_LOCK = threading.Lock()


def _extend_to(n):
    if n < len(_FIB):
        return
    with _FIB_LOCK:
        table = _FIB
        while len(table) <= n:
            table.append(table[-1] + table[-2])


def fib(n):
    """Return F_n with F_1 = F_2 = 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n!r}")
    _extend_to(n)
    return _FIB[n]


def fib_sum_identity(n):
    """Return ``(1 + F_1 + ... + F_n, F_{n+2})``; the two are always equal."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index must be >= 1, got {n!r}")
    return 1 + sum(fib(i) for i in range(1, n + 1)), fib(n + 2)


def zeckendorf(n):
    """Canonical Zeckendorf string of ``n`` (greedy; '' for 0).

    >>> zeckendorf(17)
    '100101'
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"expected a natural number, got {n!r}")
    if n == 0:
        return ""
    k = 2
    while fib(k + 1) <= n:
        k += 1
    # k is now the largest index with F_k <= n; it lands on bit k-1.
    bits = []
    remainder = n
    for i in range(k, 1, -1):
        if fib(i) <= remainder:
            bits.append("1")
            remainder -= fib(i)
        else:
            bits.append("0")
    return "".join(bits)


def from_zeckendorf(bits):
    """Decode a Zeckendorf string. Leading zeros are accepted, '11' is not."""
    bits = bits.strip()
    if any(c not in "01" for c in bits):
        raise ValueError(f"not a binary string: {bits!r}")
    if "11" in bits:
        raise ValueError(f"non-canonical Zeckendorf string (adjacent 1s): {bits!r}")
    total = 0
    for i, c in enumerate(reversed(bits), start=1):
        if c == "1":
            total += fib(i + 1)
    return total


def parity_bit(n):
    """The n-th symbol of the Fibonacci infinite word, as '0' or '1'."""
    rep = zeckendorf(n)
    return rep[-1] if rep else "0"


def render_zeck(n, width=1):
    """Zeckendorf string left-padded with zeros to at least ``width``."""
    return zeckendorf(n).rjust(width, "0")


def zeck_enumerate(width):
    """Zeckendorf strings of 0 .. F_{width+2}-1, each padded to ``width``."""
    if not isinstance(width, int) or width < 1:
        raise ValueError(f"width must be >= 1, got {width!r}")
    return [render_zeck(n, width) for n in range(fib(width + 2))]

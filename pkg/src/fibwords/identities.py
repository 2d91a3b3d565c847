"""Catalog of product factorizations of the Fibonacci infinite word and
prefix-based checks for each of them.

Every identity has the shape ``f = u * prod_n (x_n,1 x_n,2 ...)``: a fixed
prefix word ``u`` followed by an unbounded sequence of factor groups. A
check expands the product until it covers ``length`` symbols and compares
it with the same prefix of ``f``. Passing is evidence on a finite prefix,
not a proof; the report always carries the checked length.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .factorize import crochemore_factorize, lyndon_factorize, lz_factorize
from .words import (
    christoffel_lower,
    christoffel_upper,
    cofibonacci_word,
    fibonacci_stream,
    fibonacci_word,
    reverse,
    singular_word,
)

__all__ = [
    "DEFAULT_LENGTH",
    "IdentitySpec",
    "VerificationReport",
    "catalog",
    "identity",
    "verify",
    "verify_identity",
    "verify_all",
    "ALGORITHMS",
    "expected_factors",
    "verify_algorithmic_match",
    "deluca_transpositions",
    "deluca_minimality_check",
    "lucas_lengths",
    "first_mismatch",
]

DEFAULT_LENGTH = 75025  # F_25


@dataclass(frozen=True)
class IdentitySpec:
    """One factorization ``f = prefix_word * product of groups``.

    ``groups`` is a zero-argument callable returning a fresh iterator of
    tuples of words; each tuple is one term of the product.
    """

    id: str
    prefix_word: str
    groups: object
    formula: str

    def factors(self):
        """Flat iterator over the product's factors (prefix word excluded)."""
        return itertools.chain.from_iterable(self.groups())

    def with_prefix(self, prefix_word):
        return IdentitySpec(self.id, prefix_word, self.groups, self.formula)


@dataclass(frozen=True)
class VerificationReport:
    id: str
    checked_length: int
    factors_consumed: int
    mismatch: int = None  # first differing position, None when passed

    @property
    def passed(self):
        return self.mismatch is None

    @property
    def status(self):
        return "pass" if self.passed else f"fail@{self.mismatch}"

    def to_dict(self):
        return {
            "id": self.id,
            "checked_length": self.checked_length,
            "factors_consumed": self.factors_consumed,
            "status": "pass" if self.passed else "fail",
            "mismatch": self.mismatch,
        }


def _from(start, make):
    return lambda: (make(n) for n in itertools.count(start))


F = fibonacci_word
CF = cofibonacci_word
S = singular_word
C = christoffel_lower
U = christoffel_upper


def _rev(n):
    return reverse(fibonacci_word(n))


_CATALOG = (
    IdentitySpec("I1", "0", _from(1, lambda n: (F(n),)), "0 . prod_{n>=1} f_n"),
    IdentitySpec(
        "I2", "01001", _from(2, lambda n: (F(n), F(n - 1), F(n))),
        "01001 . prod_{n>=2} f_n f_{n-1} f_n",
    ),
    IdentitySpec(
        "I3", "0100", _from(2, lambda n: (F(n - 1), F(n), F(n - 1))),
        "0100 . prod_{n>=2} f_{n-1} f_n f_{n-1}",
    ),
    IdentitySpec("I4", "0", _from(1, lambda n: (CF(2 * n + 1),)), "0 . prod_{n>=1} f'_{2n+1}"),
    IdentitySpec("I5", "01", _from(1, lambda n: (CF(2 * n + 2),)), "01 . prod_{n>=1} f'_{2n+2}"),
    IdentitySpec("I6", "", _from(1, lambda n: (S(n),)), "prod_{n>=1} fhat_n"),
    IdentitySpec(
        "I7", "0100", _from(2, lambda n: (S(n), S(n - 1), S(n))),
        "0100 . prod_{n>=2} fhat_n fhat_{n-1} fhat_n",
    ),
    IdentitySpec(
        "I8", "010", _from(2, lambda n: (S(n - 1), S(n), S(n - 1))),
        "010 . prod_{n>=2} fhat_{n-1} fhat_n fhat_{n-1}",
    ),
    IdentitySpec("I9", "", _from(1, lambda n: (C(2 * n + 1),)), "prod_{n>=1} c_{2n+1}"),
    IdentitySpec("I10", "0", _from(2, lambda n: (U(2 * n),)), "0 . prod_{n>=2} ~c_{2n}"),
    IdentitySpec(
        "I11", "010", _from(1, lambda n: (C(2 * n + 1), C(2 * n + 1), C(2 * n + 2))),
        "010 . prod_{n>=1} c_{2n+1}^2 c_{2n+2}",
    ),
    IdentitySpec(
        "I12", "0100", _from(1, lambda n: (U(2 * n + 1), U(2 * n + 2), U(2 * n + 2))),
        "0100 . prod_{n>=1} ~c_{2n+1} ~c_{2n+2}^2",
    ),
    IdentitySpec("I13", "", _from(2, lambda n: (_rev(n),)), "prod_{n>=2} ~f_n"),
    IdentitySpec("I14", "", _from(2, lambda n: (_rev(2 * n),)), "prod_{n>=2} ~f_{2n}"),
    IdentitySpec("I15", "0", _from(2, lambda n: (_rev(2 * n + 1),)), "0 . prod_{n>=2} ~f_{2n+1}"),
    IdentitySpec(
        "I16", "01", _from(2, lambda n: (_rev(n), _rev(n))), "01 . prod_{n>=2} (~f_n)^2"
    ),
)

_BY_ID = {spec.id: spec for spec in _CATALOG}


def catalog():
    """All sixteen identities, in order I1..I16."""
    return list(_CATALOG)


def identity(ident):
    try:
        return _BY_ID[ident.upper()]
    except (KeyError, AttributeError):
        raise ValueError(f"unknown identity {ident!r} (expected I1..I16)") from None


def first_mismatch(a, b):
    """Index of the first position where ``a`` and ``b`` differ, or None.

    Strings of different length differ at the shorter length.
    """
    if a == b:
        return None
    n = min(len(a), len(b))
    if a[:n] == b[:n]:
        return n
    lo, hi = 0, n  # a[:lo] == b[:lo], a[:hi] != b[:hi]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid
    return lo


def _expand(words, length):
    """Concatenate words until at least ``length`` symbols; count the words used."""
    parts, total, used = [], 0, 0
    for w in words:
        if total >= length:
            break
        if not w:
            raise ValueError("factor generators must yield non-empty words")
        parts.append(w)
        total += len(w)
        used += 1
    return "".join(parts)[:length], used


def verify(spec, length=DEFAULT_LENGTH):
    """Check one :class:`IdentitySpec` against the first ``length`` symbols of f."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    head = (spec.prefix_word,) if spec.prefix_word else ()
    word, used = _expand(itertools.chain(head, spec.factors()), length)
    target = fibonacci_stream().take(length)
    return VerificationReport(spec.id, length, max(used - len(head), 0), first_mismatch(word, target))


def verify_identity(ident, length=DEFAULT_LENGTH):
    """Like :func:`verify` but takes an identity tag such as ``"I6"``."""
    spec = ident if isinstance(ident, IdentitySpec) else identity(ident)
    return verify(spec, length)


def verify_all(length=DEFAULT_LENGTH, workers=None):
    """Reports for I1..I16 in catalog order (run on a thread pool)."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: verify(s, length), _CATALOG))


def expected_factors(method):
    """The factor sequence each algorithm is expected to produce on f."""
    if method == "lz":
        return (S(n) for n in itertools.count(1))
    if method == "lyndon-01":
        return (C(2 * n + 1) for n in itertools.count(1))
    if method == "lyndon-10":
        return itertools.chain(("0",), (U(2 * n) for n in itertools.count(2)))
    if method == "crochemore":
        return itertools.chain(("0", "1", "0"), (_rev(n) for n in itertools.count(4)))
    raise ValueError(f"unknown method {method!r} (expected one of {', '.join(ALGORITHMS)})")


ALGORITHMS = {
    "lz": lambda w: lz_factorize(w, prefix=True),
    "lyndon-01": lambda w: lyndon_factorize(w, "01", prefix=True),
    "lyndon-10": lambda w: lyndon_factorize(w, "10", prefix=True),
    "crochemore": lambda w: crochemore_factorize(w, prefix=True),
}


def verify_algorithmic_match(method, length=DEFAULT_LENGTH):
    """Run a factorization algorithm on a prefix of f and compare its output
    with the expected factor sequence.

    Complete factors must equal the expected ones, in order. An incomplete
    trailing factor must be a prefix of what the expected factors spell
    from that point on.
    """
    if method not in ALGORITHMS:
        expected_factors(method)  # raises with the list of methods
    if length < 2:
        raise ValueError(f"length must be >= 2, got {length}")
    text = fibonacci_stream().take(length)
    result = ALGORITHMS[method](text)
    expected = expected_factors(method)
    matched = 0
    for (start, size), done in zip(result.spans, result.complete):
        got = text[start : start + size]
        if done:
            want = next(expected)
            if got != want:
                pos = start + (first_mismatch(got, want) or 0)
                return VerificationReport(method, length, matched, pos)
            matched += 1
        else:
            ahead, _ = _expand(expected, size)
            if ahead != got:
                return VerificationReport(method, length, matched, start + first_mismatch(got, ahead))
    return VerificationReport(method, length, matched)


def deluca_transpositions(k, probe_length):
    """Swap every pair among the first ``k`` factors of I14 and compare the
    resulting word with f.

    Returns ``[(i, j, outcome), ...]`` with 0-based factor indices and
    outcome one of ``"greater"``, ``"smaller"``, ``"inconclusive"``.
    Beyond the first ``k`` factors both words agree, so the comparison
    depth is capped at their total length plus the longest of them.
    """
    if k < 2:
        raise ValueError(f"need at least two factors, got k={k}")
    spec = identity("I14")
    head = list(itertools.islice(spec.factors(), k))
    depth = min(probe_length, sum(map(len, head)) + max(map(len, head)))
    target = fibonacci_stream().take(depth)
    out = []
    for i, j in itertools.combinations(range(k), 2):
        swapped = list(head)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        tail = itertools.islice(spec.factors(), k, None)
        word, _ = _expand(itertools.chain(swapped, tail), depth)
        if word > target:
            outcome = "greater"
        elif word < target:
            outcome = "smaller"
        else:
            outcome = "inconclusive"
        out.append((i, j, outcome))
    return out


def deluca_minimality_check(k, probe_length):
    """True iff every transposition among the first ``k`` factors of I14
    gives a word strictly greater than f on the probe.

    Only transpositions are tried, not all permutations.
    """
    return all(o == "greater" for _, _, o in deluca_transpositions(k, probe_length))


def lucas_lengths(count):
    """Factor lengths of I8 with its leading ``010`` split as ``01 . 0`` and
    each group of three singular words taken as one factor."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    spec = identity("I8")
    groups = spec.groups()
    lengths = [2, len(spec.prefix_word) - 2]
    while len(lengths) < count:
        lengths.append(sum(map(len, next(groups))))
    return lengths[:count]

"""Greedy factorizations of binary words.

Three rules are implemented:

* ``lz_factorize``: each phrase is the shortest prefix of the remaining
  suffix that occurs exactly once in the text read so far, the phrase
  included (overlapping occurrences count). This is not LZ77's
  longest-match rule.
* ``lyndon_factorize``: Chen-Fox-Lyndon factorization via Duval.
* ``crochemore_factorize``: each phrase is a fresh letter or the longest
  prefix of the remaining suffix with an earlier, possibly overlapping,
  occurrence.

When the source is a prefix of an infinite word (``prefix=True``), the
last span may be flagged incomplete: more input could still change it.
"""

from dataclasses import dataclass, field

from .words import check_word

__all__ = [
    "Cancelled",
    "Factorization",
    "occurrence_positions",
    "longest_previous_factor",
    "lz_factorize",
    "lyndon_factorize",
    "crochemore_factorize",
    "factorize",
]

LZ = "lz-paper"
LYNDON = "lyndon"
CROCHEMORE = "crochemore"


class Cancelled(Exception):
    """Raised when a ``cancel`` callback asks a factorization to stop."""


@dataclass(frozen=True)
class Factorization:
    method: str
    source: str = field(repr=False)
    spans: tuple
    complete: tuple
    order: str = None

    def __post_init__(self):
        pos = 0
        for start, length in self.spans:
            if start != pos or length <= 0:
                raise ValueError(f"spans are not contiguous at offset {pos}")
            pos += length
        if pos != len(self.source):
            raise ValueError("spans do not cover the source")
        if len(self.complete) != len(self.spans):
            raise ValueError("one completeness flag per span is required")
        if not all(self.complete[:-1]):
            raise ValueError("only the final factor may be incomplete")

    def __len__(self):
        return len(self.spans)

    def factors(self):
        return [self.source[s : s + n] for s, n in self.spans]

    def complete_factors(self):
        return [
            self.source[s : s + n]
            for (s, n), done in zip(self.spans, self.complete)
            if done
        ]

    @property
    def remainder(self):
        """The trailing incomplete factor, or None."""
        if self.spans and not self.complete[-1]:
            s, n = self.spans[-1]
            return self.source[s : s + n]
        return None

    def to_dict(self):
        d = {
            "method": self.method,
            "length": len(self.source),
            "factors": [
                {"start": s, "length": n, "word": self.source[s : s + n], "complete": c}
                for (s, n), c in zip(self.spans, self.complete)
            ],
        }
        if self.order is not None:
            d["order"] = self.order
        return d


def occurrence_positions(text, pattern):
    """All start offsets of ``pattern`` in ``text``, overlaps included."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    out = []
    i = text.find(pattern)
    while i != -1:
        out.append(i)
        i = text.find(pattern, i + 1)
    return out


def longest_previous_factor(w, i):
    """Largest L such that w[i:i+L] also starts at some position j < i."""

    def seen(L):
        # an occurrence inside w[:i+L-1] starts strictly before i
        return w.find(w[i : i + L], 0, i + L - 1) != -1

    limit = len(w) - i
    lo, step = 0, 1
    while lo + step <= limit and seen(lo + step):
        lo += step
        step *= 2
    hi = min(lo + step, limit + 1)  # seen(hi) is false or out of range
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if seen(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _prepare(source):
    w = check_word(source)
    if not w:
        raise ValueError("cannot factorize the empty word")
    return w


def _poll(cancel):
    if cancel is not None and cancel():
        raise Cancelled()


def _lz_step_naive(w, i):
    n = len(w)
    L = 1
    while i + L <= n:
        if len(occurrence_positions(w[: i + L], w[i : i + L])) == 1:
            return L, True
        L += 1
    return n - i, False


def _lz_step(w, i):
    L = longest_previous_factor(w, i) + 1
    if i + L > len(w):
        return len(w) - i, False
    return L, True


def lz_factorize(source, *, prefix=False, cancel=None, naive=False):
    """Shortest-unique-prefix phrasing.

    A trailing phrase that never became unique is flagged incomplete,
    whether or not the source is an infinite-word prefix. ``naive=True``
    selects the quadratic reference scan.
    """
    w = _prepare(source)
    step = _lz_step_naive if naive else _lz_step
    spans, complete = [], []
    i = 0
    while i < len(w):
        _poll(cancel)
        L, done = step(w, i)
        spans.append((i, L))
        complete.append(done)
        i += L
    return Factorization(LZ, w, tuple(spans), tuple(complete))


def _crochemore_step_naive(w, i):
    n = len(w)
    L = 0
    while i + L < n and len(occurrence_positions(w[: i + L + 1], w[i : i + L + 1])) >= 2:
        L += 1
    return L


def crochemore_factorize(source, *, prefix=False, cancel=None, naive=False):
    """Fresh-letter / longest-earlier-occurrence phrasing."""
    w = _prepare(source)
    step = _crochemore_step_naive if naive else longest_previous_factor
    n = len(w)
    spans, complete = [], []
    i = 0
    while i < n:
        _poll(cancel)
        L = step(w, i)
        if L == 0:
            spans.append((i, 1))
            complete.append(True)
            i += 1
            continue
        spans.append((i, L))
        complete.append(not (prefix and i + L == n))
        i += L
    return Factorization(CROCHEMORE, w, tuple(spans), tuple(complete))


def lyndon_factorize(source, order="01", *, prefix=False, cancel=None):
    """Duval's algorithm.

    With ``prefix=True`` every factor still open when the input runs out is
    merged into one incomplete remainder; factors emitted before that point
    are final for every extension of the input.
    """
    w = _prepare(source)
    if order == "10":
        s = w.translate(str.maketrans("01", "10"))
    elif order == "01":
        s = w
    else:
        raise ValueError(f"order must be '01' or '10', got {order!r}")
    n = len(s)
    spans, complete = [], []
    i = 0
    while i < n:
        _poll(cancel)
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        if j == n and prefix:
            spans.append((i, n - i))
            complete.append(False)
            break
        period = j - k
        while i <= k:
            spans.append((i, period))
            complete.append(True)
            i += period
    return Factorization(LYNDON, w, tuple(spans), tuple(complete), order=order)


def factorize(method, source, order="01", **kwargs):
    """Dispatch on a method name: 'lz', 'lyndon' or 'crochemore'."""
    if method in ("lz", LZ):
        return lz_factorize(source, **kwargs)
    if method == LYNDON:
        return lyndon_factorize(source, order, **kwargs)
    if method == CROCHEMORE:
        return crochemore_factorize(source, **kwargs)
    raise ValueError(f"unknown factorization method {method!r}")

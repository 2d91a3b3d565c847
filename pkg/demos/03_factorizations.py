"""
Factorization algorithms on the Fibonacci word
==============================================

The shortest-unique-prefix (LZ) rule recovers the singular words, Duval's
algorithm recovers the odd lower Christoffel words (or, with 1 < 0, the even
upper ones), and Crochemore's rule gives 0, 1, 0 and then reversed Fibonacci
words. Parenthesised factors are still open at the end of the prefix.
"""

from fibwords.factorize import crochemore_factorize, lyndon_factorize, lz_factorize
from fibwords.words import fibonacci_stream


def show(label, result):
    parts = [w if done else f"({w})" for w, done in zip(result.factors(), result.complete)]
    print(f"{label:>12}: " + " . ".join(parts))


prefix = fibonacci_stream().take(60)
print("f[:60] =", prefix)
show("lz", lz_factorize(prefix, prefix=True))
show("lyndon 0<1", lyndon_factorize(prefix, "01", prefix=True))
show("lyndon 1<0", lyndon_factorize(prefix, "10", prefix=True))
show("crochemore", crochemore_factorize(prefix, prefix=True))

# on a plain finite word nothing is left open
show("0101001", crochemore_factorize("0101001"))

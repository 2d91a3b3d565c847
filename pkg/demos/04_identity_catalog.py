"""
The sixteen product identities
==============================

Each identity writes f as a fixed word followed by an infinite product.
They are checked here on the first F_25 = 75025 symbols, together with the
four algorithm-to-product matches and the lexicographic minimality of the
reversed even Fibonacci words.
"""

import itertools
import time

from fibwords.identities import (
    catalog,
    deluca_transpositions,
    lucas_lengths,
    verify,
    verify_algorithmic_match,
)

start = time.perf_counter()
for spec in catalog():
    report = verify(spec, 75025)
    first = " . ".join(itertools.islice(spec.factors(), 5))
    print(f"{spec.id:>4} {report.status:<5} f = {spec.formula:<45} {spec.prefix_word} | {first} ...")
print(f"checked in {time.perf_counter() - start:.3f}s")

for method in ("lz", "lyndon-01", "lyndon-10", "crochemore"):
    print(method, verify_algorithmic_match(method, 75025).status)

print("Lucas lengths from I8:", lucas_lengths(10))
print("swaps among first 5 factors of I14:", deluca_transpositions(5, 10**5))

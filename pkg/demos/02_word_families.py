"""
Word families
=============

Fibonacci words, central words, co-Fibonacci words, singular words and
lower/upper Christoffel words for small indices.
"""

from fibwords.words import (
    central_word,
    christoffel_lower,
    christoffel_upper,
    cofibonacci_word,
    fibonacci_word,
    singular_word,
)

rows = [
    ("f_n", fibonacci_word, 1),
    ("p_n", central_word, 3),
    ("f'_n", cofibonacci_word, 3),
    ("fhat_n", singular_word, 1),
    ("c_n", christoffel_lower, 3),
    ("~c_n", christoffel_upper, 3),
]

for name, make, first in rows:
    print(name)
    for n in range(first, 10):
        print(f"  n={n}: {make(n) or '(empty)'}")

# singular words are the only length-F_n factors whose rotation is not a factor
n = 6
text = fibonacci_word(n + 4)
L = len(fibonacci_word(n))
factors = sorted({text[i : i + L] for i in range(len(text) - L + 1)})
print(f"\n{len(factors)} factors of length {L}:", factors)
print("singular word:", singular_word(n))

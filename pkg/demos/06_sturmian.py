"""
Standard Sturmian words
=======================

Directives d_1, d_2, ... define s_n = s_{n-1}^{d_{n-2}} s_{n-2}. All ones
gives the Fibonacci word; other choices give other slopes.
"""

from fibwords.sturmian import (
    FIBONACCI_SLOPE,
    Directives,
    slope,
    slope_error_bound,
    standard_sequence,
    sturmian_stream,
)

ones = Directives([1], cycle=True)
for n in range(1, 9):
    print(n, standard_sequence(ones, n))

for depth in (1, 5, 10, 18):
    q = slope(ones, depth)
    print(f"depth {depth:2d}: {q} = {float(q):.9f}  bound {float(slope_error_bound(ones, depth)):.1e}")
print(f"limit      {FIBONACCI_SLOPE:.9f}")

for dirs in ([2], [1, 2], [3, 1]):
    d = Directives(dirs, cycle=True)
    print(dirs, "slope ~", float(slope(d, 20)), sturmian_stream(d).take(40))

"""
Zeckendorf numeration and the Fibonacci word
============================================

Every natural number is a sum of non-consecutive Fibonacci numbers. Reading
off the last digit of each representation spells the Fibonacci word.
"""

from fibwords.numeration import fib, parity_bit, zeck_enumerate, zeckendorf
from fibwords.words import fibonacci_stream

print("F_1..F_20:", [fib(n) for n in range(1, 21)])

# 17 = 13 + 3 + 1
print("17 ->", zeckendorf(17))

# all 6-bit strings without "11", in increasing order
for row, bits in enumerate(zeck_enumerate(6)):
    print(f"{bits} {row:2d}")

# the last digit of each representation, read in order
parity = "".join(parity_bit(n) for n in range(40))
print("parity:", parity)
print("stream:", fibonacci_stream().take(40))

"""
Binomial sequences
==================

C(n, i) mod 2, read along n, is periodic. Its period is the first power of
two above i and its linear complexity is i + 1.
"""

from seqbool import binomial_meta, binomial_sequence, linear_complexity, sierpinski_row

for i in range(16):
    s = binomial_sequence(i, 16)
    meta = binomial_meta(i)
    print(f"C(n,{i:2d})  {s}  period {meta.period:2d}  lc {meta.lc:2d}")

# Berlekamp-Massey agrees, given two periods
s = binomial_sequence(11, 32)
print("BM on C(n,11):", linear_complexity(s))

# rows of Pascal's triangle mod 2 (the Sierpinski triangle)
for r in range(8):
    print(str(sierpinski_row(r)).center(8))

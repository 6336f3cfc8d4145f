"""
B-representation and reverse-ANF
================================

Any sequence of period 2**t is a XOR of binomial sequences. The set of
indices used is its B-representation; read as monomials (index 5 = 101 is
x3*x1) it becomes a Boolean function, the r-ANF.
"""

from seqbool import (
    brep_from_sequence,
    parse_bits,
    profile,
    ranf_from_brep,
    sequence_from_brep,
    sequence_from_ranf,
)

s = parse_bits("0001110010011011")
b = brep_from_sequence(s)
print("sequence:", s)
print("B-rep:   ", b)
print("r-ANF:   ", ranf_from_brep(b))

# largest index gives the linear complexity, parity of the count the last bit
print(profile(b))

# the truth table of the r-ANF is the sequence again
p = ranf_from_brep(b)
print(sequence_from_ranf(p, 16) == s == sequence_from_brep(b))

# a window of two periods gives the same index set
print(brep_from_sequence(parse_bits(str(s) * 2)).support == b.support)

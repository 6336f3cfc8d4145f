"""
Truth tables, ANF and minterms
==============================

A Boolean function of n variables is a 0/1 vector of length 2**n. Its ANF
coefficients and its truth table are exchanged by the same self-inverse
binomial-matrix transform.
"""

from seqbool import anf_to_tt, binomial_matrix, minterm_support, parse_anf, parse_bits, tt_to_anf

# the 16 x 16 binomial matrix: entry (i, j) is 1 when i's bits are inside j's
H = binomial_matrix(4)
print(H)

# from a truth table to the ANF
tt = parse_bits("0001101111111000")
f = tt_to_anf(tt)
print("ANF coefficients:", f.coeffs)
print("f =", f)

# and back; minterms are just the ones of the truth table
g = parse_anf("1 + x4 + x2*x3*x4 + x1*x2", nvars=4)
print("truth table:", anf_to_tt(g))
print("minterms:", minterm_support(anf_to_tt(g)))

# the same coefficient index means a different monomial for another n
print(parse_anf("x3", 3).support, parse_anf("x3", 4).support)

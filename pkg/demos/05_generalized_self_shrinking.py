"""
Generalized self-shrinking sequences
====================================

An LFSR with a primitive polynomial of degree L gives a PN sequence u. For
each nonzero G, the combination v = sum g_j u(t - j) is kept wherever
u(t) = 1. The 2**L - 1 outputs form a family with period dividing 2**(L-1).
"""

from seqbool import gss_family, parse_poly, pn_sequence, shift_brep, verify_gss_properties

p = parse_poly("x^4+x+1")
print("PN sequence:", pn_sequence(p, "1111"))

fam = gss_family(p)
for m in fam:
    print(m.g_text, m.sequence, m.brep, m.ranf, "lc", m.profile.lc)

# half of the shifts of a full-period member contain the constant term
m = fam["0010"]
print(sum(0 in shift_brep(m.brep, r).support for r in range(8)), "of 8")

rep = verify_gss_properties(fam)
print("all properties hold:", rep.passed)
print(rep.observations)

# larger degrees work the same way
fam8 = gss_family(parse_poly("x^8+x^4+x^3+x^2+1"))
print(len(fam8), verify_gss_properties(fam8).passed)

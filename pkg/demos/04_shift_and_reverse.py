"""
Shifting and reversing through the B-representation
====================================================

Rotating a sequence or reading it backwards can be done on the index set
directly, using the ones of Sierpinski rows; no bits need to be touched.
"""

from seqbool import (
    BinomialCombo,
    brep_from_sequence,
    parse_bits,
    ranf_from_brep,
    reverse_brep,
    rotate_left,
    sequence_from_brep,
    shift_brep,
)

b = BinomialCombo(8, (5,))
for r in range(8):
    moved = shift_brep(b, r)
    print(r, sequence_from_brep(moved), moved, ranf_from_brep(moved))

# check against rotating the bits
s = parse_bits("10110001")
c = brep_from_sequence(s)
print(all(sequence_from_brep(shift_brep(c, r)) == rotate_left(s, r) for r in range(8)))

# reverse sequences
print(reverse_brep(b), sequence_from_brep(reverse_brep(b)))
print(reverse_brep(BinomialCombo(8, (2, 5, 7))))

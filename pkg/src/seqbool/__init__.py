"""Binary sequences of period 2^t as Boolean functions.

Conversions between sequences, truth tables, ANF, minterms, binomial
(B-) representations and reverse-ANF, the shift/reverse calculus on
B-representations, and the generalized self-shrinking generator.
"""

from .binomials import binomial_meta, binomial_sequence, binomial_window, sierpinski_row
from .boolrep import AnfForm, anf_to_tt, format_anf, minterm_support, parse_anf, tt_to_anf
from .gf2core import (
    BitSequence,
    CoeffVector,
    DomainError,
    ParseError,
    binomial_matrix,
    moebius,
    moebius_batch,
    parse_bits,
    rotate_left,
    seq_stats,
)
from .gssgen import (
    CharPolynomial,
    GssFamily,
    gss_family,
    gss_member,
    gss_sequence,
    is_primitive,
    linear_complexity,
    parse_poly,
    pn_sequence,
    primitive_polynomials,
    verify_gss_properties,
)
from .seqrep import (
    BinomialCombo,
    RanfPolynomial,
    anf_of_sequence,
    brep_from_ranf,
    brep_from_sequence,
    format_brep,
    format_ranf,
    parse_brep,
    parse_ranf,
    profile,
    ranf_from_brep,
    sequence_from_brep,
    sequence_from_ranf,
)
from .shiftrev import reverse_brep, reverse_sequence, shift_brep, shift_brep_right

__version__ = "0.1.0"

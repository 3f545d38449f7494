"""Canonical S4 data: element order, generator words, representation tables.

Everything here is keyed by the canonical element index 0..23: the twelve
even permutations first (coefficient slots a1..a12), then the twelve odd
permutations (slots b1..b12).  The generators are x = (1234) and y = (12);
products apply the right factor first.
"""

# Generator words realizing each element, in canonical order.
EVEN_WORDS = (
    "",
    "x^2",
    "y x^2 y",
    "x^2 y x^2 y",
    "x y",
    "x^3 y",
    "x y x^2",
    "x^3 y x^2",
    "y x^3",
    "x^2 y x",
    "x^2 y x^3",
    "y x",
)

ODD_WORDS = (
    "x",
    "x^3",
    "x y x^2 y",
    "y x^2 y x",
    "x^3 y x",
    "x y x^3",
    "x y x",
    "x^3 y x^3",
    "y",
    "x^2 y x^2",
    "y x^2",
    "x^2 y",
)

# Cycle labels for the same elements, an independent transcription of the
# canonical order (group construction cross-checks words against these).
EVEN_NAMES = (
    "e",
    "(13)(24)",
    "(14)(23)",
    "(12)(34)",
    "(134)",
    "(243)",
    "(142)",
    "(123)",
    "(143)",
    "(132)",
    "(124)",
    "(234)",
)

ODD_NAMES = (
    "(1234)",
    "(1432)",
    "(24)",
    "(13)",
    "(14)",
    "(23)",
    "(1243)",
    "(1342)",
    "(12)",
    "(34)",
    "(1324)",
    "(1423)",
)

# Degree-3 representation (from permuting the basis of the sum-zero subspace
# of Z^4), one 3x3 integer matrix per canonical index.
RHO2 = (
    # even permutations
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((-1, 0, 0), (0, -1, 0), (0, 0, 1)),
    ((-1, 0, 0), (0, 1, 0), (0, 0, -1)),
    ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    ((0, 0, -1), (1, 0, 0), (0, -1, 0)),
    ((0, 0, 1), (-1, 0, 0), (0, -1, 0)),
    ((0, 0, -1), (-1, 0, 0), (0, 1, 0)),
    ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ((0, 1, 0), (0, 0, -1), (-1, 0, 0)),
    ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
    ((0, -1, 0), (0, 0, 1), (-1, 0, 0)),
    ((0, -1, 0), (0, 0, -1), (1, 0, 0)),
    # odd permutations
    ((0, -1, 0), (1, 0, 0), (0, 0, -1)),
    ((0, 1, 0), (-1, 0, 0), (0, 0, -1)),
    ((0, -1, 0), (-1, 0, 0), (0, 0, 1)),
    ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    ((0, 0, -1), (0, 1, 0), (-1, 0, 0)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((0, 0, 1), (0, -1, 0), (-1, 0, 0)),
    ((0, 0, -1), (0, -1, 0), (1, 0, 0)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((1, 0, 0), (0, 0, -1), (0, -1, 0)),
    ((-1, 0, 0), (0, 0, 1), (0, -1, 0)),
    ((-1, 0, 0), (0, 0, -1), (0, 1, 0)),
)

# Degree-2 representation over the Eisenstein integers.  Entries are (x, y)
# pairs meaning x + y*w with w = exp(2*pi*i/3), so w^2 = -1 - w.  The 24
# elements fall into six cosets of four, in canonical-index order.
_E0 = (0, 0)
_E1 = (1, 0)
_EW = (0, 1)       # w
_EW2 = (-1, -1)    # w^2
RHO1 = (
    ((_E1, _E0), (_E0, _E1)),      # indices 0..3
    ((_EW, _E0), (_E0, _EW2)),     # indices 4..7
    ((_EW2, _E0), (_E0, _EW)),     # indices 8..11
    ((_E0, _E1), (_E1, _E0)),      # indices 12..15
    ((_E0, _EW), (_EW2, _E0)),     # indices 16..19
    ((_E0, _EW2), (_EW, _E0)),     # indices 20..23
)


def rho1_of(index):
    """2x2 Eisenstein matrix of the degree-2 representation at an element index."""
    return RHO1[index // 4]


# Cubic-factor matrices: d1 = det(A + B), d2 = det(A - B).  Each entry is a
# signed sum of four coefficients, stored as (slot, sign) pairs; A slots are
# a-indices 0..11, B slots are b-indices 0..11 (add 12 for the flat vector).
A_ENTRIES = (
    (
        ((0, 1), (1, -1), (2, -1), (3, 1)),
        ((8, 1), (9, 1), (10, -1), (11, -1)),
        ((4, -1), (5, 1), (6, -1), (7, 1)),
    ),
    (
        ((4, 1), (5, -1), (6, -1), (7, 1)),
        ((0, 1), (1, -1), (2, 1), (3, -1)),
        ((8, -1), (9, 1), (10, 1), (11, -1)),
    ),
    (
        ((8, -1), (9, 1), (10, -1), (11, 1)),
        ((4, -1), (5, -1), (6, 1), (7, 1)),
        ((0, 1), (1, 1), (2, -1), (3, -1)),
    ),
)

B_ENTRIES = (
    (
        ((8, 1), (9, 1), (10, -1), (11, -1)),
        ((0, -1), (1, 1), (2, -1), (3, 1)),
        ((4, -1), (5, 1), (6, 1), (7, -1)),
    ),
    (
        ((0, 1), (1, -1), (2, -1), (3, 1)),
        ((4, 1), (5, 1), (6, -1), (7, -1)),
        ((8, 1), (9, -1), (10, 1), (11, -1)),
    ),
    (
        ((4, -1), (5, 1), (6, -1), (7, 1)),
        ((8, 1), (9, -1), (10, -1), (11, 1)),
        ((0, -1), (1, -1), (2, 1), (3, 1)),
    ),
)

# Slot index lists (within the a- or b-half) for the six-term linear forms
# entering the cross term w = u1*B1 + u2*B2 + u3*B3 + v1*A1 + v2*A2 + v3*A3.
A_FORMS = (
    (0, 1, 4, 7, 8, 9),
    (0, 2, 5, 7, 9, 11),
    (0, 3, 6, 7, 9, 10),
)

B_FORMS = (
    (0, 1, 6, 7, 10, 11),
    (1, 2, 4, 7, 9, 10),
    (0, 2, 4, 6, 9, 11),
)

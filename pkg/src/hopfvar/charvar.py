"""Character-variety E-polynomials for ranks 2 and 3.

The character variety is the moduli of semisimple pairs (A, B) with A^n
commuting with B, up to simultaneous conjugation.  It splits into a reducible
locus (computed from lower-rank irreducibles) and an irreducible locus, which
is only populated by pairs where A^n is central.  The piece polynomials below
are exact transcriptions; their sums must equal the closed formulas in
``char_variety_epoly_formula``, which the test suite enforces for both
ranks.

Pieces, by name:

* rank 2: ``red_total`` (diagonal pairs up to swap), ``irr_total``
  (eigenvalue swap classes x non-commuting second generator), ``total``.
* rank 3: ``red_111`` (sums of three characters), ``red_21`` (irreducible
  2-dimensional plus a character), ``irr_distinct`` (A with three distinct
  eigenvalues), ``irr_repeated`` (A with a repeated eigenvalue), plus
  ``red_total``, ``irr_total`` and ``total``.
"""

from __future__ import annotations

from .poly import Poly, Q
from .strata import check_twists

__all__ = ["PIECES", "char_piece_epoly", "char_variety_epoly_formula"]

PIECES = {
    2: ("red_total", "irr_total", "total"),
    3: ("red_111", "red_21", "red_total",
        "irr_repeated", "irr_distinct", "irr_total", "total"),
}

# Intermediate values feeding the rank-3 (2,1) reducible locus: a pair of
# mutually inverse twist classes glued together contributes the first value,
# the self-inverse class (present only for even n) the second.
_RED21_PAIRED = Q ** 3 - 2 * Q ** 2 + 2 * Q - 1
_RED21_SELF = Q ** 3 - Q ** 2 - 1

# Sum over the three position patterns of the second generator for a
# distinct-eigenvalue A: q^6 - 4q^4 + 5q^3 - 3q^2 + q, plus twice
# q^5 - 2q^3 + 3q^2 - 2q + 1.
_IRR_DISTINCT_SLICE = Poly([2, -3, 3, 1, -4, 2, 1])
# Diagonalizable + non-diagonalizable second-block cases for a repeated
# eigenvalue: q^4 - q^3 + q^2 - q + 1.
_IRR_REPEATED_SLICE = Poly([1, -1, 1, -1, 1])


def char_piece_epoly(rank: int, piece: str, n: int) -> Poly:
    """E-polynomial of one character-variety piece at twist count n."""
    check_twists(n)
    if rank not in PIECES:
        raise ValueError(f"rank must be 2 or 3, got {rank}")
    if piece not in PIECES[rank]:
        raise ValueError(f"invalid piece {piece!r} for rank {rank}")

    if rank == 2:
        if piece == "red_total":
            return Q ** 2 + 1
        if piece == "irr_total":
            return (n - 1) * (Q ** 2 - Q + 1)
        return char_piece_epoly(2, "red_total", n) + char_piece_epoly(2, "irr_total", n)

    if piece == "red_111":
        return Q ** 4 + Q ** 2 + 1
    if piece == "red_21":
        # (n-1) twist classes: floor((n-1)/2) inverse pairs, plus the
        # self-inverse class when n is even.
        half = (n - 1) // 2
        return half * _RED21_PAIRED + (n - 1 - 2 * half) * _RED21_SELF
    if piece == "red_total":
        return char_piece_epoly(3, "red_111", n) + char_piece_epoly(3, "red_21", n)
    if piece == "irr_distinct":
        m = (n - 1) * (n - 2)  # always even
        return (m * _IRR_DISTINCT_SLICE).exact_div(2)
    if piece == "irr_repeated":
        return (3 * n - 3) * _IRR_REPEATED_SLICE
    if piece == "irr_total":
        return (char_piece_epoly(3, "irr_distinct", n)
                + char_piece_epoly(3, "irr_repeated", n))
    return char_piece_epoly(3, "red_total", n) + char_piece_epoly(3, "irr_total", n)


def char_variety_epoly_formula(rank: int, n: int) -> Poly:
    """Closed character-variety formula, transcribed with exact integer
    handling of the half-integer and floor terms."""
    check_twists(n)
    if rank == 2:
        return Q ** 2 + 1 + (n - 1) * (Q ** 2 - Q + 1)
    if rank == 3:
        m = (n - 1) * (n - 2)
        return (
            Q ** 4
            + (m * _IRR_DISTINCT_SLICE).exact_div(2)
            - ((n - 1) // 2) * (Q ** 3 - 2 * Q - 1)
            + 3 * (n - 1) * _IRR_REPEATED_SLICE
            - (n - 2) * (Q ** 2 + 1)
            + (n - 1) * Q ** 3
        )
    raise ValueError(f"rank must be 2 or 3, got {rank}")

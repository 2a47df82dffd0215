"""Jordan-type strata of the representation variety and their assembly.

A pair (A, B) in SL_r x SL_r with A^n commuting with B is classified by the
Jordan structure of A together with how taking n-th powers degenerates its
eigenvalue pattern.  Each admissible stratum is a product of three factors
(the eigenvalue configuration stratum, the conjugation orbit PGL_r/Stab, and
the commuting-matrix group Stab~), possibly divided by a residual symmetric
group permuting equal-looking Jordan blocks.  Summing the stratum
E-polynomials yields the E-polynomial of the whole representation variety,
which must agree with the closed formula transcribed in
``rep_variety_epoly_formula``.

Stabilizer and orbit E-polynomials are fixed constants per Jordan type; they
are pinned by the test suite (dimension checks, fibration identity, match
with the closed formulas, finite-field counts) rather than re-derived.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, Q, general_linear_epoly, special_linear_epoly
from .repring import S2Elem, S3Elem
from .strata import (
    P2_BOTH_EQUAL, P2_DISTINCT, P3_ALL_EQUAL, P3_DISTINCT, P3_TWO_EQUAL,
    Partition, check_twists, config_epoly, config_equivariant_s2,
    config_equivariant_s3,
)

__all__ = [
    "JordanType", "Stratum",
    "J2_SCALAR", "J2_BLOCK", "J2_DISTINCT",
    "J3_SCALAR", "J3_EQUAL_B21", "J3_EQUAL_B3",
    "J3_PAIR_DIAG", "J3_PAIR_B2", "J3_DISTINCT",
    "jordan_types", "admissible_strata",
    "stabilizer_epoly", "pgl_mod_stab_epoly",
    "equivariant_pgl_piece", "equivariant_stab_piece", "equivariant_pieces",
    "stratum_epoly", "rep_variety_epoly_strata", "rep_variety_epoly_formula",
]


@dataclass(frozen=True)
class JordanType:
    """One of the finitely many Jordan structures of an SL_r matrix.

    rank 2: 1 = scalar, 2 = single 2-block, 3 = distinct diagonal.
    rank 3: 1 = scalar, 2 = 2-block + 1 (equal eigenvalues), 3 = full
            3-block, 4 = diagonalizable with a repeated eigenvalue,
            5 = 2-block on the repeated eigenvalue, 6 = distinct diagonal.
    """

    rank: int
    index: int

    def __post_init__(self):
        if self.rank not in (2, 3):
            raise ValueError(f"rank must be 2 or 3, got {self.rank}")
        top = 3 if self.rank == 2 else 6
        if not 1 <= self.index <= top:
            raise ValueError(f"invalid Jordan type index {self.index} for rank {self.rank}")

    @property
    def partition(self) -> Partition:
        """Eigenvalue coincidence pattern of this Jordan structure."""
        if self.rank == 2:
            return P2_BOTH_EQUAL if self.index in (1, 2) else P2_DISTINCT
        if self.index in (1, 2, 3):
            return P3_ALL_EQUAL
        if self.index in (4, 5):
            return P3_TWO_EQUAL
        return P3_DISTINCT

    def __str__(self) -> str:
        return f"xi{self.index}(rank {self.rank})"


J2_SCALAR = JordanType(2, 1)
J2_BLOCK = JordanType(2, 2)
J2_DISTINCT = JordanType(2, 3)

J3_SCALAR = JordanType(3, 1)
J3_EQUAL_B21 = JordanType(3, 2)
J3_EQUAL_B3 = JordanType(3, 3)
J3_PAIR_DIAG = JordanType(3, 4)
J3_PAIR_B2 = JordanType(3, 5)
J3_DISTINCT = JordanType(3, 6)


def jordan_types(rank: int) -> list[JordanType]:
    top = 3 if rank == 2 else 6
    return [JordanType(rank, i) for i in range(1, top + 1)]


# Power maps preserve block structure, so a stratum src -> tgt can only be
# nonempty for these pairs; everything else is rejected at construction.
_ADMISSIBLE = {
    2: tuple([(i, i) for i in (1, 2, 3)] + [(3, 1)]),
    3: tuple([(i, i) for i in (1, 2, 3, 4, 5, 6)] + [(4, 1), (5, 2), (6, 1), (6, 4)]),
}


@dataclass(frozen=True)
class Stratum:
    """Admissible degeneration stratum src -> tgt of Jordan types."""

    src: JordanType
    tgt: JordanType

    def __post_init__(self):
        if self.src.rank != self.tgt.rank:
            raise ValueError("stratum endpoints must have equal rank")
        if (self.src.index, self.tgt.index) not in _ADMISSIBLE[self.src.rank]:
            raise ValueError(f"inadmissible stratum {self.src} -> {self.tgt}")

    @property
    def rank(self) -> int:
        return self.src.rank

    def __str__(self) -> str:
        return f"xi{self.src.index}->xi{self.tgt.index}(rank {self.rank})"


def admissible_strata(rank: int) -> list[Stratum]:
    return [Stratum(JordanType(rank, i), JordanType(rank, j))
            for i, j in _ADMISSIBLE[rank]]


def stabilizer_epoly(xi: JordanType) -> Poly:
    """E-polynomial of the group of SL_r matrices commuting with a matrix of
    this Jordan type."""
    if xi.rank == 2:
        return {
            1: special_linear_epoly(2),        # q^3 - q
            2: 2 * Q,                          # C x mu_2
            3: Q - 1,                          # diagonal torus C^*
        }[xi.index]
    return {
        1: special_linear_epoly(3),            # q^8 - q^6 - q^5 + q^3
        2: (Q - 1) * Q ** 3,                   # C^* x C^3
        3: 3 * Q ** 2,                         # mu_3 x C^2
        4: (Q ** 2 - 1) * (Q ** 2 - Q),        # GL_2 block
        5: Q * (Q - 1),                        # C^* x C
        6: (Q - 1) ** 2,                       # norm-one diagonal torus
    }[xi.index]


def pgl_mod_stab_epoly(xi: JordanType) -> Poly:
    """E-polynomial of the conjugation orbit PGL_r / Stab of this type."""
    if xi.rank == 2:
        return {
            1: Poly.one(),
            2: Q ** 2 - 1,
            3: Q ** 2 + Q,
        }[xi.index]
    return {
        1: Poly.one(),
        2: (Q ** 3 - 1) * (Q + 1),
        3: (Q ** 3 - 1) * (Q ** 2 - 1) * Q,
        4: (Q ** 2 + Q + 1) * Q ** 2,
        5: (Q ** 3 - 1) * (Q ** 3 + Q ** 2),
        6: (Q ** 2 + Q + 1) * (Q + 1) * Q ** 3,
    }[xi.index]


# -- equivariant data ----------------------------------------------------------

def equivariant_pgl_piece(xi: JordanType, group: str) -> S2Elem | S3Elem:
    """Equivariant E-polynomial of PGL_r/Stab(xi) for the block-permutation
    action of the given group ('s2' or 's3')."""
    if group not in ("s2", "s3"):
        raise ValueError(f"group must be 's2' or 's3', got {group!r}")
    if xi == J2_DISTINCT and group == "s2":
        return S2Elem(Q ** 2, Q)
    if xi == J3_DISTINCT and group == "s3":
        return S3Elem(Q ** 6, Q ** 3, Q ** 5 + Q ** 4)
    if xi == J3_DISTINCT and group == "s2":
        return S2Elem(Q ** 6 + Q ** 5 + Q ** 4, Q ** 5 + Q ** 4 + Q ** 3)
    if xi.index == 1:
        one = Poly.one()
        return S2Elem.trivial(one) if group == "s2" else S3Elem.trivial(one)
    raise ValueError(f"no equivariant orbit data for {xi} under {group}")


def equivariant_stab_piece(xi: JordanType, group: str) -> S2Elem | S3Elem:
    """Equivariant E-polynomial of Stab~(xi) for the given group action.

    For connected stabilizers the permutation acts by inner automorphisms, so
    the class is trivial-action; the norm-one diagonal torus carries genuine
    S2/S3 classes computed from its quotients.
    """
    if group not in ("s2", "s3"):
        raise ValueError(f"group must be 's2' or 's3', got {group!r}")
    if xi.index == 1:
        # the whole group, connected, permutations act by conjugation
        e = special_linear_epoly(xi.rank)
        return S2Elem.trivial(e) if group == "s2" else S3Elem.trivial(e)
    if xi == J2_DISTINCT and group == "s2":
        return S2Elem(Q, Poly.const(-1))
    if xi == J3_PAIR_DIAG and group == "s2":
        # GL_2-shaped block stabilizer, swap acts by conjugation
        return S2Elem.trivial(general_linear_epoly(2))
    if xi == J3_DISTINCT and group == "s3":
        return S3Elem(Q ** 2, Poly.one(), -Q)
    if xi == J3_DISTINCT and group == "s2":
        return S2Elem.from_quotients((Q - 1) ** 2, Q ** 2 - Q)
    raise ValueError(f"no equivariant stabilizer data for {xi} under {group}")


def equivariant_pieces(xi: JordanType, group: str) -> tuple[S2Elem | S3Elem, S2Elem | S3Elem]:
    """(orbit piece, stabilizer piece) for types carrying both."""
    return equivariant_pgl_piece(xi, group), equivariant_stab_piece(xi, group)


def stratum_group(stratum: Stratum) -> str | None:
    """Residual block-permutation group of the stratum: None, 's2' or 's3'."""
    if stratum.src == J2_DISTINCT:
        return "s2"
    if stratum.src == J3_DISTINCT:
        return "s2" if stratum.tgt == J3_PAIR_DIAG else "s3"
    return None


# -- stratum assembly ----------------------------------------------------------

def stratum_epoly(stratum: Stratum, n: int) -> Poly:
    """E-polynomial of one admissible stratum at twist count n.

    Without residual symmetry this is the plain product of the three factors;
    with symmetry it is the T-component of the equivariant product.
    """
    check_twists(n)
    group = stratum_group(stratum)
    s_src, s_tgt = stratum.src.partition, stratum.tgt.partition
    if group is None:
        return (config_epoly(s_src, s_tgt, n)
                * pgl_mod_stab_epoly(stratum.src)
                * stabilizer_epoly(stratum.tgt))
    orbit = equivariant_pgl_piece(stratum.src, group)
    stab = equivariant_stab_piece(stratum.tgt, group)
    if group == "s3":
        config = config_equivariant_s3(s_tgt, n)
    else:
        config = config_equivariant_s2(s_src, s_tgt, n)
    return (config * orbit * stab).t_component()


def rep_variety_epoly_strata(rank: int, n: int) -> Poly:
    """E-polynomial of the representation variety as the sum over all
    admissible strata (the stratification route)."""
    check_twists(n)
    total = Poly.zero()
    for stratum in admissible_strata(rank):
        total = total + stratum_epoly(stratum, n)
    return total


# Closed-formula route: fixed coefficient data, ascending in q.
_R3_N2 = Poly([0, 2, -3, -3, 1, 2, 2, 1])      # n^2 cofactor (before /2)
_R3_N1 = Poly([0, 12, -1, -17, -3, 0, 6, 3])   # n cofactor (before /2)
_R3_N0 = Poly([0, 13, 2, -6, -2, -1, 2, 1])    # constant-in-n cofactor


def rep_variety_epoly_formula(rank: int, n: int) -> Poly:
    """E-polynomial of the representation variety by the closed formula."""
    check_twists(n)
    if rank == 2:
        return ((n - 1) * Q ** 2 + n * Q + (5 - n)) * (Q ** 3 - Q)
    if rank == 3:
        # n^2 and n terms combine to an even polynomial for every n,
        # so the halving is exact.
        bracket = (
            (n // 2) * (Q ** 2 - Q) * (Q ** 2 - Q - 1)
            + (n * n * _R3_N2 - n * _R3_N1).exact_div(2)
            + _R3_N0
        )
        return (Q ** 3 - 1) * (Q ** 2 - 1) * Q ** 2 * bracket
    raise ValueError(f"rank must be 2 or 3, got {rank}")

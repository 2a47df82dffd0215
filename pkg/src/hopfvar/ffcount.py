"""Finite-field counting oracle for the representation variety.

Counts pairs (A, B) of SL_r matrices over a prime field F_q with A^n
commuting with B, by enumerating A and adding up the commutant sizes of A^n:

    count = sum over A in SL_r(F_q) of #{B in SL_r(F_q) : B A^n = A^n B}.

This reduces q^(2 r^2) pair-work to q^(r^2) matrix enumeration.  The commutant
size depends only on the conjugacy class of A^n, which for r <= 3 is pinned
down by the pair (characteristic polynomial, minimal polynomial); counts are
therefore memoized on that key.  The enumeration itself is vectorized with
numpy in fixed-size batches, classifying each matrix into one of at most
3*q^2 classes and counting the commutant of one representative per class.

Batches can be processed by several threads over disjoint index ranges; the
per-class histogram is a sum of integers, so the final count is bit-identical
for any thread count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .poly import special_linear_epoly
from .strata import check_twists, is_prime

__all__ = [
    "FqMatrix", "ConjugacyKey", "ResourceLimitError",
    "sl_order", "is_admissible", "admissibility_modulus",
    "commutant_dimension", "commutant_basis", "conjugacy_key",
    "count_commuting_det1", "count_rep_variety_points", "count_sl_matrices",
]

DEFAULT_MAX_CELLS = 10 ** 10
_BATCH = 1 << 20


class ResourceLimitError(RuntimeError):
    """Enumeration would exceed the configured cell ceiling."""


def _check_field(q: int) -> None:
    if q % 2 == 0 or not is_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")


@dataclass(frozen=True)
class FqMatrix:
    """Immutable r x r matrix over the prime field F_q (entries reduced)."""

    q: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, q: int, rows: Iterable[Iterable[int]]):
        _check_field(q)
        rs = tuple(tuple(x % q for x in row) for row in rows)
        r = len(rs)
        if r not in (2, 3) or any(len(row) != r for row in rs):
            raise ValueError("matrix must be square of rank 2 or 3")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "rows", rs)

    @staticmethod
    def identity(rank: int, q: int) -> FqMatrix:
        return FqMatrix(q, [[1 if i == j else 0 for j in range(rank)] for i in range(rank)])

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __mul__(self, other: FqMatrix) -> FqMatrix:
        if self.q != other.q or self.rank != other.rank:
            raise ValueError("incompatible matrices")
        q, r = self.q, self.rank
        a, b = self.rows, other.rows
        return FqMatrix(q, [[sum(a[i][k] * b[k][j] for k in range(r)) % q
                             for j in range(r)] for i in range(r)])

    def pow(self, n: int) -> FqMatrix:
        """n-th power by binary exponentiation, n >= 1."""
        if n < 1:
            raise ValueError("exponent must be >= 1")
        result = FqMatrix.identity(self.rank, self.q)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.rank)) % self.q

    def det(self) -> int:
        q, m = self.q, self.rows
        if self.rank == 2:
            return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % q
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) % q

    def is_scalar(self) -> bool:
        m, r = self.rows, self.rank
        return all(m[i][j] == (m[0][0] if i == j else 0)
                   for i in range(r) for j in range(r))

    def char_poly(self) -> tuple[int, ...]:
        """Monic characteristic polynomial, ascending coefficients."""
        q, m = self.q, self.rows
        t = self.trace()
        if self.rank == 2:
            return ((self.det()) % q, (-t) % q, 1)
        c2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]
              + m[0][0] * m[2][2] - m[0][2] * m[2][0]
              + m[1][1] * m[2][2] - m[1][2] * m[2][1]) % q
        return ((-self.det()) % q, c2, (-t) % q, 1)


# -- F_q[x] helpers ------------------------------------------------------------

def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], q: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % q
    return tuple(out)


def _poly_eval_scalar(coeffs: tuple[int, ...], x: int, q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % q
    return acc


def _poly_divide_linear(coeffs: tuple[int, ...], root: int, q: int) -> tuple[int, ...]:
    # synthetic division by (x - root); assumes root is a root
    out = [0] * (len(coeffs) - 1)
    carry = 0
    for i in range(len(coeffs) - 1, 0, -1):
        carry = (coeffs[i] + carry * root) % q if i < len(coeffs) - 1 else coeffs[i]
        out[i - 1] = carry
    assert (coeffs[0] + carry * root) % q == 0
    return tuple(out)


def _factor_monic(coeffs: tuple[int, ...], q: int) -> list[tuple[int, ...]]:
    """Irreducible monic factors with multiplicity (degree <= 3 inputs only:
    any factor-free remainder of degree 2 or 3 is itself irreducible)."""
    factors: list[tuple[int, ...]] = []
    cur = coeffs
    while len(cur) > 1:
        root = next((a for a in range(q) if _poly_eval_scalar(cur, a, q) == 0), None)
        if root is None:
            factors.append(cur)
            break
        factors.append(((-root) % q, 1))
        cur = _poly_divide_linear(cur, root, q)
    return factors


def _poly_at_matrix(coeffs: tuple[int, ...], M: FqMatrix) -> FqMatrix:
    acc = FqMatrix(M.q, [[0] * M.rank for _ in range(M.rank)])
    for c in reversed(coeffs):
        acc = acc * M
        acc = FqMatrix(M.q, [[(acc.rows[i][j] + (c if i == j else 0))
                              for j in range(M.rank)] for i in range(M.rank)])
    return acc


def _min_poly(M: FqMatrix) -> tuple[int, ...]:
    """Minimal polynomial: smallest monic divisor of the characteristic
    polynomial annihilating M, found by trial evaluation in degree order."""
    q = M.q
    char = M.char_poly()
    factors = _factor_monic(char, q)
    divisors: list[tuple[int, ...]] = []
    combos = [(1,)]
    for f in factors:
        combos = combos + [_poly_mul(c, f, q) for c in combos]
    for c in combos:
        if len(c) > 1:
            divisors.append(c)
    zero = FqMatrix(q, [[0] * M.rank for _ in range(M.rank)])
    for d in sorted(set(divisors), key=lambda p: (len(p), p)):
        if _poly_at_matrix(d, M) == zero:
            return d
    raise AssertionError("characteristic polynomial must annihilate the matrix")


class ConjugacyKey(NamedTuple):
    """Determines the conjugacy class of a rank <= 3 matrix: for these sizes
    the invariant factors are fixed by characteristic plus minimal
    polynomial."""

    q: int
    char: tuple[int, ...]
    minimal: tuple[int, ...]


def conjugacy_key(M: FqMatrix) -> ConjugacyKey:
    return ConjugacyKey(M.q, M.char_poly(), _min_poly(M))


# -- commutant linear algebra ---------------------------------------------------

def _kernel_basis_mod(rows: list[list[int]], q: int) -> list[list[int]]:
    """Basis of the null space of a matrix over F_q (Gaussian elimination)."""
    if not rows:
        return []
    m = len(rows[0])
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(m):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % q), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], q - 2, q)
        mat[rank] = [(x * inv) % q for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % q for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for prow, pcol in enumerate(pivots):
            v[pcol] = (-mat[prow][fc]) % q
        basis.append(v)
    return basis


def _commutator_operator(M: FqMatrix) -> list[list[int]]:
    # rows of the map X -> XM - MX on r^2 coordinates (row-major X)
    q, r, m = M.q, M.rank, M.rows
    rows = []
    for i in range(r):
        for j in range(r):
            row = [0] * (r * r)
            for a in range(r):
                for b in range(r):
                    c = 0
                    if a == i:
                        c += m[b][j]
                    if b == j:
                        c -= m[i][a]
                    row[a * r + b] = c % q
            rows.append(row)
    return rows


def commutant_basis(M: FqMatrix) -> list[FqMatrix]:
    """Basis of the algebra of matrices commuting with M."""
    r = M.rank
    vecs = _kernel_basis_mod(_commutator_operator(M), M.q)
    return [FqMatrix(M.q, [v[i * r:(i + 1) * r] for i in range(r)]) for v in vecs]


def commutant_dimension(M: FqMatrix) -> int:
    """F_q-dimension of the commutant of M: in {2, 4} for rank 2 and
    {3, 5, 9} for rank 3."""
    return len(_kernel_basis_mod(_commutator_operator(M), M.q))


def sl_order(rank: int, q: int) -> int:
    """|SL_rank(F_q)|, via the E-polynomial of SL_rank evaluated at q."""
    return special_linear_epoly(rank).evaluate(q)


_COMMUTANT_ENUM_CEILING = 50_000_000


def count_commuting_det1(M: FqMatrix, memo: Optional[dict] = None) -> int:
    """#{B in SL_r(F_q) : BM = MB}.

    A scalar M short-circuits to |SL_r(F_q)|; otherwise the commutant has
    dimension d <= 5 and all q^d members are enumerated, counting those of
    determinant one.  Results are memoized on the conjugacy key when a memo
    dict is supplied.
    """
    if M.is_scalar():
        return sl_order(M.rank, M.q)
    key = conjugacy_key(M) if memo is not None else None
    if memo is not None and key in memo:
        return memo[key]

    q, r = M.q, M.rank
    basis = commutant_basis(M)
    d = len(basis)
    if q ** d > _COMMUTANT_ENUM_CEILING:
        raise ResourceLimitError(f"commutant enumeration q^{d} too large for q={q}")
    basis_arr = np.array([b.rows for b in basis], dtype=np.int64)  # (d, r, r)
    coeffs = _index_block(0, q ** d, q, d)                          # (q^d, d)
    mats = np.tensordot(coeffs, basis_arr, axes=([1], [0])) % q     # (q^d, r, r)
    dets = _det_batch(mats, q)
    count = int((dets == 1).sum())
    if memo is not None:
        memo[key] = count
    return count


# -- vectorized enumeration ------------------------------------------------------

def _index_block(start: int, stop: int, q: int, width: int) -> np.ndarray:
    """Rows start..stop-1 of the base-q odometer with `width` digits."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for pos in range(width - 1, -1, -1):
        out[:, pos] = idx % q
        idx = idx // q
    return out


def _det_batch(mats: np.ndarray, q: int) -> np.ndarray:
    if mats.shape[1] == 2:
        return (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % q
    m = mats
    return (m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
            - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
            + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])) % q


def _matmul_batch(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    return np.einsum("nij,njk->nik", a, b) % q


def _pow_batch(mats: np.ndarray, n: int, q: int) -> np.ndarray:
    if n == 1:
        return mats
    r = mats.shape[1]
    result = np.broadcast_to(np.eye(r, dtype=np.int64), mats.shape).copy()
    base = mats
    while n:
        if n & 1:
            result = _matmul_batch(result, base, q)
        n >>= 1
        if n:
            base = _matmul_batch(base, base, q)
    return result


def _repeated_root_tables(q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per (trace, second-coefficient) key of a det-1 cubic x^3 - t x^2 + s x - 1:
    whether it has a repeated root, and the coefficients (u, v) of the
    quadratic (x - a)(x - b) = x^2 - u x + v splitting off the repeated root a."""
    bad = np.zeros(q * q, dtype=bool)
    us = np.zeros(q * q, dtype=np.int64)
    vs = np.zeros(q * q, dtype=np.int64)
    for t in range(q):
        for s in range(q):
            rep = None
            for a in range(q):
                if (a * a * a - t * a * a + s * a - 1) % q == 0 \
                        and (3 * a * a - 2 * t * a + s) % q == 0:
                    rep = a
                    break
            if rep is not None:
                b = (t - 2 * rep) % q
                bad[t * q + s] = True
                us[t * q + s] = (rep + b) % q
                vs[t * q + s] = (rep * b) % q
    return bad, us, vs


def _classify_batch(M: np.ndarray, q: int,
                    tables: tuple[np.ndarray, np.ndarray, np.ndarray] | None) -> np.ndarray:
    """Class code per matrix: 3 * (char-poly key) + commutant-size code.

    code 0: cyclic (minimal = characteristic), 1: middle class (repeated
    eigenvalue, minimal of degree rank-1), 2: scalar.
    """
    if M.shape[1] == 2:
        t = (M[:, 0, 0] + M[:, 1, 1]) % q
        scalar = (M[:, 0, 1] == 0) & (M[:, 1, 0] == 0) & (M[:, 0, 0] == M[:, 1, 1])
        return t * 3 + np.where(scalar, 2, 0)

    t = (M[:, 0, 0] + M[:, 1, 1] + M[:, 2, 2]) % q
    s = (M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
         + M[:, 0, 0] * M[:, 2, 2] - M[:, 0, 2] * M[:, 2, 0]
         + M[:, 1, 1] * M[:, 2, 2] - M[:, 1, 2] * M[:, 2, 1]) % q
    key = t * q + s
    off_zero = ((M[:, 0, 1] == 0) & (M[:, 0, 2] == 0) & (M[:, 1, 0] == 0)
                & (M[:, 1, 2] == 0) & (M[:, 2, 0] == 0) & (M[:, 2, 1] == 0))
    scalar = off_zero & (M[:, 0, 0] == M[:, 1, 1]) & (M[:, 1, 1] == M[:, 2, 2])
    code = np.zeros(len(M), dtype=np.int64)

    bad_table, u_table, v_table = tables
    candidates = bad_table[key] & ~scalar
    if candidates.any():
        # middle class iff the repeated-root quadratic annihilates the matrix
        sub = np.flatnonzero(candidates)
        Mb = M[sub]
        u = u_table[key[sub]][:, None, None]
        v = v_table[key[sub]][:, None, None]
        eye = np.eye(3, dtype=np.int64)
        resid = (_matmul_batch(Mb, Mb, q) - u * Mb + v * eye) % q
        annihilated = (resid == 0).all(axis=(1, 2))
        code[sub[annihilated]] = 1
    code[scalar] = 2
    return key * 3 + code


def _histogram_range(lo: int, hi: int, rank: int, n: int, q: int,
                     tables, nclasses: int) -> tuple[np.ndarray, dict]:
    hist = np.zeros(nclasses, dtype=np.int64)
    reps: dict[int, tuple[tuple[int, ...], ...]] = {}
    cells = rank * rank
    for start in range(lo, hi, _BATCH):
        stop = min(start + _BATCH, hi)
        ent = _index_block(start, stop, q, cells)
        mats = ent.reshape(-1, rank, rank)
        keep = _det_batch(mats, q) == 1
        if not keep.any():
            continue
        powered = _pow_batch(mats[keep], n, q)
        cls = _classify_batch(powered, q, tables)
        hist += np.bincount(cls, minlength=nclasses)
        uniq, first = np.unique(cls, return_index=True)
        for c, i in zip(uniq.tolist(), first.tolist()):
            if c not in reps:
                reps[c] = tuple(map(tuple, powered[i].tolist()))
    return hist, reps


def admissibility_modulus(rank: int, n: int) -> int:
    """q-1 must be divisible by this for the count/E-polynomial identity."""
    check_twists(n)
    if rank == 2:
        return 2 * n
    if rank == 3:
        return 6 * n
    raise ValueError(f"rank must be 2 or 3, got {rank}")


def is_admissible(rank: int, n: int, q: int) -> bool:
    return (q - 1) % admissibility_modulus(rank, n) == 0


def count_rep_variety_points(rank: int, n: int, q: int,
                             threads: Optional[int] = None,
                             max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """Exact #{(A, B) in SL_rank(F_q)^2 : A^n B = B A^n}.

    Computes the raw count for any odd prime q; equality with the closed-formula
    E-polynomial at q is only expected when is_admissible(rank, n, q).
    Raises ResourceLimitError when q^(rank^2) exceeds max_cells.
    """
    if rank not in (2, 3):
        raise ValueError(f"rank must be 2 or 3, got {rank}")
    check_twists(n)
    _check_field(q)
    cells = q ** (rank * rank)
    if cells > max_cells:
        raise ResourceLimitError(
            f"enumeration of {cells} matrices exceeds the ceiling {max_cells}")

    tables = _repeated_root_tables(q) if rank == 3 else None
    nclasses = 3 * q * q if rank == 3 else 3 * q
    if threads is None:
        threads = os.cpu_count() or 1
    threads = max(1, min(threads, cells))

    if threads == 1 or cells <= _BATCH:
        hist, reps = _histogram_range(0, cells, rank, n, q, tables, nclasses)
    else:
        bounds = [cells * i // threads for i in range(threads + 1)]
        hist = np.zeros(nclasses, dtype=np.int64)
        reps = {}
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_histogram_range, bounds[i], bounds[i + 1],
                                   rank, n, q, tables, nclasses)
                       for i in range(threads)]
            for fut in futures:
                h, r = fut.result()
                hist += h
                for c, m in r.items():
                    reps.setdefault(c, m)

    memo: dict = {}
    total = 0
    for c in np.flatnonzero(hist).tolist():
        total += int(hist[c]) * count_commuting_det1(FqMatrix(q, reps[c]), memo)
    return total


def count_sl_matrices(rank: int, q: int) -> int:
    """Number of determinant-one matrices found by the raw enumerator
    (consistency check for the enumeration machinery itself)."""
    _check_field(q)
    cells = q ** (rank * rank)
    total = 0
    for start in range(0, cells, _BATCH):
        stop = min(start + _BATCH, cells)
        mats = _index_block(start, stop, q, rank * rank).reshape(-1, rank, rank)
        total += int((_det_batch(mats, q) == 1).sum())
    return total

"""GF(2) linear algebra on dense uint8 matrices."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

BinaryMatrix = np.ndarray


def to_gf2(matrix) -> BinaryMatrix:
    return np.asarray(matrix, dtype=np.uint8) % 2


@dataclass(frozen=True)
class RowReduceResult:
    matrix: BinaryMatrix
    rank: int
    pivots: tuple[int, ...]


def gf2_row_reduce(matrix, columns: Sequence[int] | None = None) -> RowReduceResult:
    """Reduced row echelon form, pivoting only on `columns` (all columns by default).

    Rows are XORed in bulk: each pivot clears its column with one vectorised
    update over every other row.
    """
    mat = to_gf2(matrix).copy()
    n_rows, n_cols = mat.shape
    order = range(n_cols) if columns is None else columns
    pivots = []
    row = 0
    for col in order:
        if row == n_rows:
            break
        candidates = np.flatnonzero(mat[row:, col])
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            mat[[row, pivot]] = mat[[pivot, row]]
        hits = np.flatnonzero(mat[:, col])
        hits = hits[hits != row]
        if hits.size:
            mat[hits] ^= mat[row]
        pivots.append(col)
        row += 1
    return RowReduceResult(matrix=mat, rank=len(pivots), pivots=tuple(pivots))


def gf2_rank(matrix) -> int:
    """Compute rank over GF(2) using row reduction."""
    mat = to_gf2(matrix)
    if mat.size == 0:
        return 0
    return gf2_row_reduce(mat).rank


def gf2_row_basis(matrix) -> BinaryMatrix:
    """Independent rows spanning the row space of matrix"""
    reduced = gf2_row_reduce(matrix)
    return reduced.matrix[: reduced.rank].copy()


def gf2_nullspace_basis(matrix) -> BinaryMatrix:
    """Return a basis for the nullspace of matrix over GF(2)."""
    reduced = gf2_row_reduce(matrix)
    mat = reduced.matrix
    n = mat.shape[1]
    pivots = set(reduced.pivots)
    free_cols = [c for c in range(n) if c not in pivots]
    if not free_cols:
        return np.zeros((0, n), dtype=np.uint8)
    basis = np.zeros((len(free_cols), n), dtype=np.uint8)
    for idx, free in enumerate(free_cols):
        basis[idx, free] = 1
        for row, col in enumerate(reduced.pivots):
            if mat[row, free]:
                basis[idx, col] = 1
    return basis


def gf2_matmul(a, b) -> BinaryMatrix:
    """Matrix product over GF(2); integer accumulation avoids uint8 overflow"""
    return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64) % 2).astype(np.uint8)


def gf2_span(generator) -> BinaryMatrix:
    """All 2^k vectors of the row space of a k-row generator, in message order"""
    gen = to_gf2(generator)
    k = gen.shape[0]
    messages = (np.arange(1 << k)[:, None] >> np.arange(k)[None, :]) & 1
    return gf2_matmul(messages, gen)


def same_row_space(a, b) -> bool:
    """True when the stacked matrix has the rank of each part"""
    rank_a, rank_b = gf2_rank(a), gf2_rank(b)
    return rank_a == rank_b == gf2_rank(np.vstack([to_gf2(a), to_gf2(b)]))


def to_text(matrix) -> str:
    return "\n".join("".join(str(int(bit)) for bit in row) for row in to_gf2(matrix))

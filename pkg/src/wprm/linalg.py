"""Gaussian elimination over GF(q) on integer-repr matrices."""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .ff import FieldSpec


def row_reduce(M, F: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` over ``F``.

    Returns ``(R, pivots)`` where ``R`` holds only the ``len(pivots)`` nonzero
    rows, each with a leading 1 in column ``pivots[i]``.
    """
    R = np.array(M, dtype=F.add.dtype, copy=True)
    if R.ndim != 2:
        raise ValueError("row_reduce expects a 2-D matrix")
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if nz.size == 0:
            continue
        r = row + int(nz[0])
        if r != row:
            R[[row, r]] = R[[r, row]]
        lead = R[row, col]
        if lead != 1:
            R[row] = F.mul[F.inv_table[lead], R[row]]
        factors = R[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            sub = F.mul[F.neg[factors[hit]][:, None], R[row][None, :]]
            R[hit] = F.add[R[hit], sub]
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank(M, F: FieldSpec) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    # eliminate along the shorter side
    if M.shape[1] > M.shape[0]:
        M = M.T
    return len(row_reduce(M, F)[1])


def sparse_rank(rows: Iterable[Mapping[int, int]], F: FieldSpec) -> int:
    """Rank of a matrix given as sparse rows ``{column: coefficient}``.

    Echelon form is kept incrementally with pivots keyed by their leading
    column.  Binomial rows reduce to binomial rows, so vanishing-ideal
    products ``m * f_i`` stay cheap however large the degree.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                s = F.inverse(row[lead])
                pivots[lead] = {c: F.times(s, v) for c, v in row.items()}
                break
            f = F.negate(row[lead])
            for c, v in piv.items():
                nv = F.plus(row.get(c, 0), F.times(f, v))
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)

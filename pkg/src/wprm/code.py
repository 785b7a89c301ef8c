"""Weighted projective Reed-Muller codes C_{d,Y} on Y = P(1,1,b)(F_q)."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, OracleDisagreement, UnsupportedDegree, UnsupportedRegime
from .ff import FieldSpec, field_make
from .gpoly import Monomial, dim_graded_piece, evaluation_matrix, monomial_basis
from .hilbert import MATRIX_BUDGET, hf_closed, regularity_first, reg_contains, series_expand, series_numerator
from .linalg import rank, row_reduce
from .wps import PointSet, WeightedSpace, enumerate_points, projective_count, space_make

DEFAULT_BUDGET = 2**24
MODES = ("formula", "oracle", "both")
_TAIL_ROWS = 20000


def default_budget() -> int:
    """Oracle codeword budget; ``WPRM_BUDGET`` overrides the default 2^24."""
    env = os.environ.get("WPRM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(eq=False)
class GeneratorMatrix:
    matrix: np.ndarray
    d: int
    space: WeightedSpace
    field: FieldSpec
    monomials: tuple[Monomial, ...]
    points: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return (
            self.d == other.d
            and self.space == other.space
            and self.field == other.field
            and self.monomials == other.monomials
            and self.points == other.points
            and np.array_equal(self.matrix, other.matrix)
        )


@dataclass
class CodeParams:
    N: int
    K: int
    delta: int
    provenance: dict = field(default_factory=dict)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.N, self.K, self.delta)

    def to_dict(self) -> dict:
        return {"N": self.N, "K": self.K, "delta": self.delta, "provenance": self.provenance}


def build_generator_matrix(
    space: WeightedSpace, F: FieldSpec, d: int, points: PointSet | Sequence, budget: int = MATRIX_BUDGET
) -> GeneratorMatrix:
    if d < 0:
        raise ValueError("degree must be non-negative")
    pts = tuple(tuple(p) for p in points)
    if not pts:
        raise ValueError("evaluation set is empty")
    size = dim_graded_piece(space, d) * len(pts)
    if size > budget:
        raise BudgetExceeded(f"generator matrix of {size} entries exceeds budget {budget}")
    basis = tuple(monomial_basis(space, d))
    return GeneratorMatrix(evaluation_matrix(basis, pts, F), d, space, F, basis, pts)


def code_dimension(G: GeneratorMatrix) -> int:
    return rank(G.matrix, G.field)


def mindist_formula(q: int, b: int, d: int) -> int:
    """Minimum distance of C_{d,Y} for Y = P(1,1,b)(F_q), d >= 1."""
    if d < 1:
        raise UnsupportedDegree("the distance formula covers d >= 1 only")
    if d < q:
        return q * (q - d + 1)
    k = (d - q) // b
    return max(q - k, 1)


def distance_cases(q: int, b: int, d: int) -> list[tuple[int, int]]:
    """``(case, delta)`` for each of the seven piecewise distance cases whose
    domain contains ``(q, b, d)``; the domains overlap at their boundaries."""
    out = []
    if q <= d < b:
        out.append((1, q))
    if d < q <= b:
        out.append((2, q * (q - d + 1)))
    if d < b < q:
        out.append((3, q * (q - d + 1)))
    if b <= d < q:
        out.append((4, q * (q - d + 1)))
    if d >= q:
        k = (d - q) // b
        if b <= q <= d and 0 <= k <= q - 2:
            out.append((5, q - k))
        if q < b <= d and 0 <= k <= q - 2:
            out.append((6, q - k))
        if k >= q - 1:
            out.append((7, 1))
    return out


def _span(rows: np.ndarray, F: FieldSpec, projective: bool) -> np.ndarray:
    """All combinations of ``rows``; with ``projective`` only those whose
    first nonzero coefficient is 1 (one codeword per nonzero scalar class)."""
    n = rows.shape[1]
    full = np.zeros((1, n), dtype=rows.dtype)  # every combination, including 0
    proj = np.zeros((0, n), dtype=rows.dtype)  # normalised nonzero combinations
    qs = np.arange(F.q)
    # iterate from the last row so that the first row is the leading coefficient
    for g in rows[::-1]:
        multiples = F.mul[qs[:, None], g[None, :]]  # (q, n)
        if projective:
            lead = F.add[full, multiples[1][None, :]]
            proj = np.concatenate([lead, proj])
        full = F.add[multiples[:, None, :], full[None, :, :]].reshape(-1, n)
    return proj if projective else full


def mindist_oracle(G: GeneratorMatrix, budget: int | None = None) -> int:
    """Exhaustive minimum Hamming weight over all nonzero codewords.

    The basis is row-reduced first, so the work is bounded by q^K.  Scalar
    multiples share a weight, so only messages with leading coefficient 1 are
    expanded; the count of nonzero messages still has to fit ``budget``.
    """
    budget = default_budget() if budget is None else budget
    F = G.field
    basis, _ = row_reduce(G.matrix, F)
    K = basis.shape[0]
    if K == 0:
        raise ValueError("the zero code has no minimum distance")
    if F.q**K - 1 > budget:
        raise BudgetExceeded(f"{F.q}^{K} - 1 codewords exceed the oracle budget {budget}")
    # split messages as (head | tail): head ranges over normalised classes,
    # tail over everything; plus the head = 0 slice with a normalised tail
    n_tail = 1
    while n_tail < K and F.q ** (n_tail + 1) <= _TAIL_ROWS:
        n_tail += 1
    head, tail = basis[: K - n_tail], basis[K - n_tail :]
    tail_all = _span(tail, F, projective=False)
    best = int((_span(tail, F, projective=True) != 0).sum(axis=1).min())
    if head.shape[0]:
        add_flat = F.add.reshape(-1)
        q = F.q
        tail_scaled = tail_all.astype(np.int64)
        for h in _span(head, F, projective=True):
            words = add_flat[h.astype(np.int64) * q + tail_scaled]
            w = int(np.count_nonzero(words, axis=1).min())
            if w < best:
                best = w
                if best == 1:
                    break
    return best


def _points(q: int, b: int) -> PointSet:
    return enumerate_points(space_make((1, 1, b)), field_make(q))


def code_params(
    q: int,
    b: int,
    d: int,
    mode: str = "formula",
    budget: int | None = None,
    points: PointSet | None = None,
) -> CodeParams:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    points = points if points is not None else _points(q, b)
    F, space = points.field, points.space
    prov: dict[str, str] = {}

    N = len(points)
    if N != projective_count(q, 3):
        raise OracleDisagreement(f"enumerated {N} points, expected {projective_count(q, 3)}")
    prov["N"] = "both-agree"

    G = build_generator_matrix(space, F, d, points)
    K = code_dimension(G)
    try:
        K_formula = hf_closed(q, b, d)
    except UnsupportedRegime:
        K_formula = series_expand(series_numerator(q, 1, b), d)[d]
    if K != K_formula:
        raise OracleDisagreement(f"rank {K} != closed-form H({d}) = {K_formula} for q={q}, b={b}")
    prov["K"] = "both-agree"

    if d == 0:
        prov["delta"] = "convention"
        return CodeParams(N, K, N, prov)

    delta = None
    if mode in ("formula", "both"):
        delta = mindist_formula(q, b, d)
        prov["delta"] = "formula"
    if mode in ("oracle", "both"):
        try:
            found = mindist_oracle(G, budget)
        except BudgetExceeded:
            if mode == "oracle":
                raise
        else:
            if delta is not None and found != delta:
                raise OracleDisagreement(f"formula delta {delta} != exhaustive delta {found} at q={q}, b={b}, d={d}")
            prov["delta"] = "both-agree" if delta is not None else "oracle"
            delta = found
    return CodeParams(N, K, delta, prov)


def lemma41_bound_check(q: int, b: int, d: int, budget: int | None = None) -> bool:
    """For 0 < d < b the distance is at least q, by formula and by oracle."""
    if not 0 < d < b:
        raise UnsupportedDegree(f"the bound needs 0 < d < b, got d={d}, b={b}")
    pts = _points(q, b)
    G = build_generator_matrix(pts.space, pts.field, d, pts)
    return mindist_oracle(G, budget) >= q and mindist_formula(q, b, d) >= q


# --- export ----------------------------------------------------------------

def export_genmat(G: GeneratorMatrix, fmt: str = "plain") -> str:
    rows = G.matrix.tolist()
    if fmt == "plain":
        return "".join(" ".join(map(str, r)) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "weights": list(G.space.weights),
            "q": G.field.q,
            "modulus": list(G.field.modulus) if G.field.modulus else None,
            "d": G.d,
            "monomials": [list(m) for m in G.monomials],
            "points": [list(p) for p in G.points],
            "matrix": rows,
        }
        return json.dumps(doc)
    raise ValueError(f"unknown format {fmt!r}")


def parse_genmat(text: str, fmt: str = "plain"):
    """Inverse of :func:`export_genmat`: an array for plain/csv, a
    :class:`GeneratorMatrix` for json."""
    if fmt == "plain":
        return np.array([[int(x) for x in line.split()] for line in text.splitlines() if line.strip()])
    if fmt == "csv":
        return np.array([[int(x) for x in r] for r in csv.reader(io.StringIO(text)) if r])
    if fmt == "json":
        doc = json.loads(text)
        F = field_make(doc["q"], doc.get("modulus"))
        mat = np.array(doc["matrix"], dtype=F.add.dtype).reshape(len(doc["monomials"]), len(doc["points"]))
        return GeneratorMatrix(
            mat,
            doc["d"],
            space_make(doc["weights"]),
            F,
            tuple(tuple(m) for m in doc["monomials"]),
            tuple(tuple(p) for p in doc["points"]),
        )
    raise ValueError(f"unknown format {fmt!r}")


# --- tables ----------------------------------------------------------------

TABLE_COLUMNS = ("degree", "N", "K", "delta", "marker")


def reg_marker(q: int, b: int, d: int) -> str:
    if d == regularity_first(q, b):
        return "reg-first"
    return "reg" if reg_contains(q, b, d) else ""


def table_rows(q: int, b: int, degrees, mode: str = "both", budget: int | None = None) -> list[dict]:
    pts = _points(q, b)
    rows = []
    for d in degrees:
        cp = code_params(q, b, d, mode=mode, budget=budget, points=pts)
        rows.append({"degree": d, "N": cp.N, "K": cp.K, "delta": cp.delta, "marker": reg_marker(q, b, d)})
    return rows


def format_rows(rows: list[dict], columns: Sequence[str], fmt: str = "csv") -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(str(r[c]) for c in columns) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([{c: r[c] for c in columns} for r in rows]) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def table_reproduce(q: int, b: int, degrees, fmt: str = "csv", mode: str = "both", budget: int | None = None) -> str:
    return format_rows(table_rows(q, b, degrees, mode, budget), TABLE_COLUMNS, fmt)

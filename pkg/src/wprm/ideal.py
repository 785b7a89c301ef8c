"""Vanishing ideal of P(1,a,b)(F_q), its free resolution, and checks of both."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .errors import GcdViolation, NegativeExponent
from .ff import FieldSpec, field_make
from .gpoly import GradedPolynomial, dim_graded_piece, evaluation_matrix, monomial_basis, wdeg
from .linalg import rank, sparse_rank
from .wps import PointSet, WeightedSpace, enumerate_points, space_make


@dataclass(frozen=True)
class IdealGens:
    f1: GradedPolynomial
    f2: GradedPolynomial
    f3: GradedPolynomial
    q: int
    a: int
    b: int

    @property
    def polys(self) -> tuple[GradedPolynomial, GradedPolynomial, GradedPolynomial]:
        return (self.f1, self.f2, self.f3)

    @property
    def space(self) -> WeightedSpace:
        return self.f1.space

    @property
    def field(self) -> FieldSpec:
        return self.f1.field

    def degrees(self) -> tuple[int, int, int]:
        return tuple(f.homogeneous_degree() for f in self.polys)


def _ring(q: int, a: int, b: int, F: FieldSpec | None):
    if a < 1 or b < 1:
        raise GcdViolation(f"weights must be positive, got a={a}, b={b}")
    if gcd(a, b) != 1:
        raise GcdViolation(f"gcd(a, b) = gcd({a}, {b}) != 1")
    F = F if F is not None else field_make(q)
    if F.q != q:
        raise ValueError(f"field {F} does not have {q} elements")
    return space_make((1, a, b)), F


def _binomial(S, F, m1, m2) -> GradedPolynomial:
    return GradedPolynomial(S, F, {m1: 1}) - GradedPolynomial(S, F, {m2: 1})


def vanishing_gens(q: int, a: int, b: int, field: FieldSpec | None = None) -> IdealGens:
    """The three binomial generators of I(P(1,a,b)(F_q))."""
    S, F = _ring(q, a, b, field)
    f1 = _binomial(S, F, (0, (q - 1) * b + 1, 1), (0, 1, (q - 1) * a + 1))
    f2 = _binomial(S, F, ((q - 1) * b + 1, 0, 1), (1, 0, q))
    f3 = _binomial(S, F, ((q - 1) * a + 1, 1, 0), (1, q, 0))
    return IdealGens(f1, f2, f3, q, a, b)


@dataclass(frozen=True)
class ResolutionData:
    gens: IdealGens
    phi1: tuple[GradedPolynomial, ...]
    phi2: tuple[tuple[GradedPolynomial, GradedPolynomial], ...]
    lambdas: tuple[int, int, int]
    sigmas: tuple[int, int]

    @property
    def A1(self) -> GradedPolynomial:
        return self.phi2[1][0]

    @property
    def A2(self) -> GradedPolynomial:
        return self.phi2[2][0]

    def with_entry(self, i: int, j: int, poly: GradedPolynomial) -> "ResolutionData":
        rows = [list(r) for r in self.phi2]
        rows[i][j] = poly
        return ResolutionData(self.gens, self.phi1, tuple(tuple(r) for r in rows), self.lambdas, self.sigmas)


def shifts(q: int, a: int, b: int) -> tuple[tuple[int, int, int], tuple[int, int]]:
    lam = ((q - 1) * a * b + a + b, q * b + 1, q * a + 1)
    sig = ((q - 1) * a * b + a + b + 1, q * b + q * a + 1)
    return lam, sig


def resolution_data(q: int, a: int, b: int, field: FieldSpec | None = None) -> ResolutionData:
    gens = vanishing_gens(q, a, b, field)
    S, F = gens.space, gens.field
    minus_one = F.negate(1)

    A1 = GradedPolynomial(S, F)
    for i in range(1, a + 1):
        e = ((i - 1) * (q - 1) * b, 1, (q - 1) * a - i * q + i)
        if min(e) < 0:
            raise NegativeExponent(f"A1 term i={i} has exponents {e}")
        A1 = A1 + GradedPolynomial(S, F, {e: minus_one})
    A2 = GradedPolynomial(S, F)
    for i in range(1, b + 1):
        e = ((i - 1) * (q - 1) * a, (q - 1) * b - i * q + i, 1)
        if min(e) < 0:
            raise NegativeExponent(f"A2 term i={i} has exponents {e}")
        A2 = A2 + GradedPolynomial(S, F, {e: 1})

    x1 = GradedPolynomial.variable(S, F, 0)
    zero = GradedPolynomial(S, F)
    f2_x1 = gens.f2.divide_by_variable(0)
    f3_x1 = gens.f3.divide_by_variable(0)
    phi2 = ((x1, zero), (A1, f3_x1), (A2, -f2_x1))
    lam, sig = shifts(q, a, b)
    return ResolutionData(gens, gens.polys, phi2, lam, sig)


@dataclass
class Report:
    params: dict
    checks: list[dict] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail=None) -> None:
        entry = {"name": name, "pass": bool(passed)}
        if detail is not None:
            entry["detail"] = detail
        self.checks.append(entry)

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def __getitem__(self, name: str) -> bool:
        for c in self.checks:
            if c["name"] == name:
                return c["pass"]
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"checks": self.checks, "params": self.params}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def minors(res: ResolutionData) -> tuple[GradedPolynomial, GradedPolynomial, GradedPolynomial]:
    """2x2 minors of phi2 deleting row 1, row 2, row 3 respectively."""
    (a, b), (c, d), (e, f) = res.phi2
    return (c * f - d * e, a * f - b * e, a * d - b * c)


def verify_resolution(res: ResolutionData) -> Report:
    g = res.gens
    f1, f2, f3 = res.phi1
    rep = Report({"q": g.q, "a": g.a, "b": g.b})

    comp = [sum((res.phi1[i] * res.phi2[i][j] for i in range(3)), GradedPolynomial(g.space, g.field)) for j in range(2)]
    rep.add("complex", all(not c for c in comp))

    # f1's sign is convention dependent, and so is irrelevant to I(phi2)
    m1, m2, m3 = minors(res)
    rep.add("minors", (m1 == f1 or m1 == -f1) and m2 == -f2 and m3 == f3)

    rank_phi1 = 1 if any(res.phi1) else 0
    rep.add("phi1_nonzero", all(bool(f) for f in res.phi1))

    graded = all(res.phi1[j].homogeneous_degree() == res.lambdas[j] for j in range(3))
    bad = []
    for i in range(3):
        for j in range(2):
            ent = res.phi2[i][j]
            if ent and ent.homogeneous_degree() != res.sigmas[j] - res.lambdas[i]:
                bad.append([i + 1, j + 1])
    rep.add("graded", graded and not bad, bad or None)

    rank_phi2 = 2 if any(bool(m) for m in (m1, m2, m3)) else (1 if any(any(r) for r in res.phi2) else 0)
    rep.add("rank_sum", rank_phi1 + rank_phi2 == 3, {"rank_phi1": rank_phi1, "rank_phi2": rank_phi2})
    return rep


def _as_polys(gens) -> Sequence[GradedPolynomial]:
    return gens.polys if isinstance(gens, IdealGens) else tuple(gens)


def ideal_piece_dim(gens, d: int) -> int:
    """dim of the degree-d part of the ideal generated by ``gens``."""
    polys = _as_polys(gens)
    if not polys:
        return 0
    S = polys[0].space
    F = polys[0].field
    index = {m: i for i, m in enumerate(monomial_basis(S, d))}
    rows = []
    for f in polys:
        df = f.homogeneous_degree()
        if not isinstance(df, int) or df > d:
            continue
        for m in monomial_basis(S, d - df):
            rows.append({index[tuple(x + y for x, y in zip(m, t))]: c for t, c in f.terms.items()})
    return sparse_rank(rows, F)


def vanishing_dim(points: PointSet, d: int) -> int:
    """dim I_d(Y) = dim S_d - rank of the evaluation matrix."""
    basis = monomial_basis(points.space, d)
    return len(basis) - rank(evaluation_matrix(basis, points.points, points.field), points.field)


def check_generation(gens, points: PointSet | None, d_max: int) -> Report:
    polys = _as_polys(gens)
    if points is None:
        points = enumerate_points(polys[0].space, polys[0].field)
    params = {"weights": list(points.space.weights), "q": points.field.q, "d_max": d_max, "generators": len(polys)}
    if isinstance(gens, IdealGens):
        params.update(a=gens.a, b=gens.b)
    rep = Report(params)
    bad = []
    for d in range(d_max + 1):
        got, want = ideal_piece_dim(polys, d), vanishing_dim(points, d)
        if got != want:
            bad.append({"d": d, "ideal": got, "vanishing": want})
    rep.add("generation", not bad, bad or None)
    return rep


def first_disagreement(report: Report):
    for c in report.checks:
        if c["name"] == "generation" and c.get("detail"):
            return c["detail"][0]["d"]
    return None


def verify_all(q: int, a: int, b: int, d_max: int | None = None) -> Report:
    """Resolution checks plus degreewise generation up to ``d_max`` (3qb)."""
    res = resolution_data(q, a, b)
    rep = verify_resolution(res)
    d_max = 3 * q * b if d_max is None else d_max
    gen = check_generation(res.gens, None, d_max)
    rep.checks.extend(gen.checks)
    rep.params["d_max"] = d_max
    return rep

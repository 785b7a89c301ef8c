"""Cross-validation grid: every closed form against its brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .code import (
    DEFAULT_BUDGET,
    build_generator_matrix,
    code_dimension,
    mindist_formula,
    mindist_oracle,
    distance_cases,
)
from .errors import WPRMError
from .ff import field_make
from .hilbert import (
    a_invariant,
    hf_closed,
    hf_from_p,
    hf_oracle,
    quasi_poly_eval,
    reg_contains,
    series_expand,
    series_numerator,
)
from .ideal import check_generation, first_disagreement, resolution_data, vanishing_gens, verify_resolution
from .wps import PointSet, enumerate_points, scale_point, space_make

HILBERT_QS = (2, 3, 4, 5)
HILBERT_BS = tuple(range(2, 8))
DISTANCE_QS = (2, 3)
RESOLUTION_CASES = tuple((q, 1, b) for q in (2, 3, 4, 5) for b in (2, 3, 5, 7)) + ((3, 2, 3), (5, 2, 3), (5, 3, 5))
GENERATION_CASES = tuple((q, b) for q in (2, 3, 4, 5) for b in range(1, 8))
AINV_CASES = tuple((q, b) for q in (2, 3, 5) for b in (2, 5, 7))
CONTAINMENT_QS = (2, 3, 4, 5, 7, 8, 9)
CONTAINMENT_BS = tuple(range(1, 10))


@dataclass
class SweepReport:
    cases: list[dict] = field(default_factory=list)

    def record(self, check: str, passed: bool, **params) -> None:
        self.cases.append({"check": check, **params, "pass": bool(passed)})

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for c in self.cases:
            s = out.setdefault(c["check"], {"pass": 0, "fail": 0})
            s["pass" if c["pass"] else "fail"] += 1
        return out

    def failures(self) -> list[dict]:
        return [c for c in self.cases if not c["pass"]]


def _points(q: int, weights) -> PointSet:
    return enumerate_points(space_make(weights), field_make(q))


def hilbert_agreement(rep: SweepReport, qs=HILBERT_QS, bs=HILBERT_BS) -> None:
    """closed = series = oracle (= sum of p-coefficients) for d <= 3qb."""
    for q in qs:
        for b in bs:
            pts = _points(q, (1, 1, b))
            d_max = 3 * q * b
            ser = series_expand(series_numerator(q, 1, b), d_max)
            for d in range(d_max + 1):
                vals = {hf_closed(q, b, d), ser[d], hf_oracle(pts.space, pts.field, pts, d), hf_from_p(q, b, d)}
                rep.record("hilbert", len(vals) == 1, q=q, b=b, d=d)


def hilbert_two_way(rep: SweepReport, cases=((2, 1, 1), (3, 1, 1), (5, 1, 1), (3, 2, 3), (2, 3, 5), (5, 2, 3))) -> None:
    """series = oracle where no closed form is claimed."""
    for q, a, b in cases:
        pts = _points(q, (1, a, b))
        d_max = 3 * q * max(a, b)
        ser = series_expand(series_numerator(q, a, b), d_max)
        for d in range(d_max + 1):
            rep.record("hilbert-2way", ser[d] == hf_oracle(pts.space, pts.field, pts, d), q=q, a=a, b=b, d=d)


def distance_agreement(rep: SweepReport, qs=DISTANCE_QS, bs=HILBERT_BS, budget: int = DEFAULT_BUDGET) -> None:
    """Rank = closed = series for K, and formula = oracle for delta where q^K fits."""
    for q in qs:
        for b in bs:
            pts = _points(q, (1, 1, b))
            d_max = q + (q - 1) * b + b
            ser = series_expand(series_numerator(q, 1, b), d_max)
            for d in range(1, d_max + 1):
                G = build_generator_matrix(pts.space, pts.field, d, pts)
                K = code_dimension(G)
                ok = K == hf_closed(q, b, d) == ser[d]
                if q**K <= budget:
                    ok = ok and mindist_oracle(G, budget) == mindist_formula(q, b, d)
                rep.record("distance", ok, q=q, b=b, d=d)


def regularity(rep: SweepReport, qs=(2, 3, 4, 5), bs=HILBERT_BS) -> None:
    for q in qs:
        for b in bs:
            pts = _points(q, (1, 1, b))
            n = q * q + q + 1
            for d in range(3 * q * b + 1):
                full = hf_oracle(pts.space, pts.field, pts, d) == n
                rep.record("regularity", full == reg_contains(q, b, d), q=q, b=b, d=d)


def resolutions(rep: SweepReport, cases=RESOLUTION_CASES) -> None:
    for q, a, b in cases:
        r = verify_resolution(resolution_data(q, a, b))
        rep.record("resolution", r.ok, q=q, a=a, b=b)


def generation(rep: SweepReport, cases=GENERATION_CASES) -> None:
    for q, b in cases:
        gens = vanishing_gens(q, 1, b)
        r = check_generation(gens, None, 3 * q * b)
        rep.record("generation", r.ok, q=q, b=b)
    # dropping f2 must break generation exactly at its degree
    gens = vanishing_gens(2, 1, 5)
    r = check_generation([gens.f1, gens.f3], None, 3 * 2 * 5)
    rep.record("generation-negative", first_disagreement(r) == 2 * 5 + 1, q=2, b=5)


def a_invariants(rep: SweepReport, cases=AINV_CASES) -> None:
    for q, b in cases:
        pts = _points(q, (1, 1, b))
        d_max = 3 * q * b
        off = [d for d in range(d_max + 1) if hf_oracle(pts.space, pts.field, pts, d) != quasi_poly_eval(q, b, d)]
        ok = max(off) == q * b + q - b - 1 == a_invariant(q, 1, b)
        rep.record("a-invariant", ok, q=q, b=b)


def containment(rep: SweepReport, qs=CONTAINMENT_QS, bs=CONTAINMENT_BS) -> None:
    for q in qs:
        for b in bs:
            ok = True
            for d in range(1, 3 * q * b + 1):
                cases = distance_cases(q, b, d)
                value = mindist_formula(q, b, d)
                ok = ok and bool(cases) and all(v == value for _, v in cases)
            rep.record("containment", ok, q=q, b=b)


def representative_invariance(
    rep: SweepReport, trials: int = 50, q: int = 5, bs=(2, 5, 7), ds=range(2, 9), seed: int = 0, budget: int = 10**6
) -> None:
    """Rescale every point by an independent random unit and recompute."""
    rng = random.Random(seed)
    F = field_make(q)
    base: dict[tuple[int, int], tuple] = {}
    pts_by_b = {b: _points(q, (1, 1, b)) for b in bs}
    for t in range(trials):
        b, d = rng.choice(bs), rng.choice(list(ds))
        pts = pts_by_b[b]
        if (b, d) not in base:
            G = build_generator_matrix(pts.space, F, d, pts)
            K = code_dimension(G)
            base[(b, d)] = (len(pts), K, mindist_oracle(G, budget) if q**K - 1 <= budget else None)
        moved = [scale_point(pts.space, F, p, rng.randrange(1, q)) for p in pts]
        G = build_generator_matrix(pts.space, F, d, moved)
        K = code_dimension(G)
        N0, K0, delta0 = base[(b, d)]
        ok = (len(moved), K) == (N0, K0)
        if delta0 is not None:
            ok = ok and mindist_oracle(G, budget) == delta0
        rep.record("representatives", ok, q=q, b=b, d=d, trial=t)


CHECKS = {
    "hilbert": hilbert_agreement,
    "hilbert-2way": hilbert_two_way,
    "distance": distance_agreement,
    "regularity": regularity,
    "resolution": resolutions,
    "generation": generation,
    "a-invariant": a_invariants,
    "containment": containment,
    "representatives": representative_invariance,
}


def run_sweep(checks=None) -> SweepReport:
    rep = SweepReport()
    for name in checks or CHECKS:
        try:
            CHECKS[name](rep)
        except WPRMError as exc:
            rep.record(name, False, error=f"{type(exc).__name__}: {exc}")
    return rep

"""Hilbert series and Hilbert function of Y = P(1,a,b)(F_q).

Three independent routes to H_Y(d):

* :func:`series_expand` expands the rational Hilbert series built from the
  graded Betti numbers of the free resolution;
* :func:`hf_closed` evaluates the piecewise closed form (a = 1 only);
* :func:`hf_oracle` takes the rank of the evaluation matrix of S_d.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .errors import BudgetExceeded, GcdViolation, UnsupportedRegime
from .ff import FieldSpec
from .gpoly import dim_graded_piece, evaluation_matrix, monomial_basis
from .linalg import rank
from .wps import PointSet, WeightedSpace

MATRIX_BUDGET = 10**7


@dataclass(frozen=True)
class HilbertSeries:
    """Numerator / prod(1 - t^w) with the numerator in combined form."""

    numerator: tuple[tuple[int, int], ...]
    denom_weights: tuple[int, ...]
    raw_terms: tuple[tuple[int, int], ...] = ()

    def numerator_at(self, t: int) -> int:
        return sum(c * t**e for e, c in self.numerator)

    @property
    def degree(self) -> int:
        """Degree of the rational function, i.e. the a-invariant."""
        return max(e for e, _ in self.numerator) - sum(self.denom_weights)

    def coefficients(self) -> list[int]:
        top = max(e for e, _ in self.numerator)
        out = [0] * (top + 1)
        for e, c in self.numerator:
            out[e] += c
        return out


def _check_ab(a: int, b: int) -> None:
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise GcdViolation(f"need positive coprime a, b; got a={a}, b={b}")


def series_numerator(q: int, a: int, b: int) -> HilbertSeries:
    _check_ab(a, b)
    raw = (
        (0, 1),
        (q * a + 1, -1),
        (q * b + 1, -1),
        ((q - 1) * a * b + a + b, -1),
        (q * a + q * b + 1, 1),
        ((q - 1) * a * b + a + b + 1, 1),
    )
    acc: dict[int, int] = defaultdict(int)
    for e, c in raw:
        acc[e] += c
    num = tuple(sorted((e, c) for e, c in acc.items() if c))
    return HilbertSeries(num, (1, a, b), raw)


def synthetic_divide(coeffs: list[int], w: int) -> tuple[list[int], list[int]]:
    """Divide sum c_i t^i by (1 - t^w); returns (quotient, remainder)."""
    c = list(coeffs)
    n = len(c)
    quot = [0] * max(n - w, 0)
    # process from the top: c_i t^i = -c_i t^{i-w} (1 - t^w) + c_i t^{i-w}
    for i in range(n - 1, w - 1, -1):
        if c[i]:
            quot[i - w] = -c[i]
            c[i - w] += c[i]
            c[i] = 0
    return quot, c[:w]


def divisible_by_one_minus(series: HilbertSeries, w: int) -> bool:
    return not any(synthetic_divide(series.coefficients(), w)[1])


def series_expand(series: HilbertSeries, d_max: int) -> list[int]:
    """Power series coefficients H(0..d_max)."""
    h = [0] * (d_max + 1)
    for e, c in series.numerator:
        if e <= d_max:
            h[e] += c
    for w in series.denom_weights:
        for n in range(w, d_max + 1):
            h[n] += h[n - w]
    return h


def p_coefficients(q: int, b: int) -> list[int]:
    """Coefficients of numerator/(1-t)^2 for P(1,1,b), degrees 0..qb+q-1."""
    out = []
    for j in range(q * b + q):
        if j <= q - 1:
            out.append(j + 1)
        elif j <= q * b:
            out.append(q + 1)
        else:
            out.append(q * b + q - j)
    return out


def hf_from_p(q: int, b: int, d: int) -> int:
    """H(d) as sum_i p_{d - ib}."""
    p = p_coefficients(q, b)
    return sum(p[d - i * b] for i in range(d // b + 1) if d - i * b < len(p))


def _kappa(q: int, r0: int) -> int:
    return q + 1 if r0 == 0 else q - r0


def hf_closed(q: int, b: int, d: int) -> int:
    """Closed form of H_Y(d) for Y = P(1,1,b)(F_q)."""
    if d < 0:
        return 0
    d0, r0 = divmod(d, b)
    if q <= b:
        if d0 <= q - 1:
            return d0 * (q + 1) + r0 + 1 if r0 <= q - 1 else (d0 + 1) * (q + 1)
        return q * (q + 1) + (1 if r0 == 0 else 0)
    if b == 1:
        raise UnsupportedRegime("closed form for q > b requires b >= 2; use the series or the oracle")
    if d <= b - 1:
        return d + 1
    if d <= q:
        return (d0 + 1) * (d + 1) - b * d0 * (d0 + 1) // 2
    k = (d - q) // b
    if d <= q * b:
        return (k + 1) * (q + 1) + sum(d - i * b + 1 for i in range(k + 1, d0 + 1))
    kappa = _kappa(q, r0)
    if k < q:
        return (
            (d0 - q) * (q + q * b - d)
            + b * (d0 - q - 1) * (d0 - q) // 2
            + (q + k - d0) * (q + 1)
            + (d + 1) * (d0 - k)
            - b * (d0 * (d0 + 1) - k * (k + 1)) // 2
            + kappa
        )
    return q * q + r0 + kappa


def hf_oracle(space: WeightedSpace, field: FieldSpec, points: PointSet, d: int, budget: int = MATRIX_BUDGET) -> int:
    """Rank of the evaluation map S_d -> F_q^{|points|}."""
    if d < 0:
        return 0
    size = dim_graded_piece(space, d) * len(points)
    if size > budget:
        raise BudgetExceeded(f"evaluation matrix of {size} entries exceeds budget {budget}")
    basis = monomial_basis(space, d)
    return rank(evaluation_matrix(basis, points.points, field), field)


@dataclass(frozen=True)
class RegularitySet:
    first: int
    step: int

    def __contains__(self, d: int) -> bool:
        return d >= self.first and d % self.step == 0

    def describe(self) -> str:
        return f"d >= {self.first} and d % {self.step} == 0"


@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    values: tuple[int, ...]

    def __call__(self, d: int) -> int:
        return self.values[d % self.period]


def regularity_first(q: int, b: int) -> int:
    return (q + (q - 1) // b) * b


def reg_contains(q: int, b: int, d: int) -> bool:
    return d in regularity_set(q, b)


def regularity_set(q: int, b: int) -> RegularitySet:
    return RegularitySet(regularity_first(q, b), b)


def quasi_polynomial(q: int, b: int) -> QuasiPolynomial:
    return QuasiPolynomial(b, (q * (q + 1) + 1,) + (q * (q + 1),) * (b - 1))


def quasi_poly_eval(q: int, b: int, d: int) -> int:
    return quasi_polynomial(q, b)(d)


def a_invariant(q: int, a: int, b: int) -> int:
    return series_numerator(q, a, b).degree


def hilbert_values(q: int, a: int, b: int, d_max: int, mode: str, points: PointSet | None = None) -> list[int]:
    """H(0..d_max) by one route: ``closed``, ``series`` or ``oracle``."""
    if mode == "series":
        return series_expand(series_numerator(q, a, b), d_max)
    if mode == "closed":
        if a != 1:
            raise UnsupportedRegime("closed form is only available for a = 1")
        return [hf_closed(q, b, d) for d in range(d_max + 1)]
    if mode == "oracle":
        if points is None:
            raise ValueError("oracle mode needs the point set")
        return [hf_oracle(points.space, points.field, points, d) for d in range(d_max + 1)]
    raise ValueError(f"unknown mode {mode!r}")

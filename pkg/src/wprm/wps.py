"""Weighted projective spaces and their F_q-rational points.

Two tuples in F_q^r are the same point when they differ by some lam in the
algebraic closure.  Within F_q^r that orbit is
``{(mu^{w_i/g} x_i) : mu in F_q*}`` where g is the gcd of the weights on the
support of x; scaling by lam in F_q* alone would split, e.g., [0:0:1] and
[0:0:2] in P(1,1,2) over F_5.  A point is stored as the lexicographically
smallest member of that orbit, comparing coordinates by integer repr.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterator, Sequence

from .errors import BudgetExceeded, EmptyWeights, NonTrivialGcd, WrongWeights, ZeroLambda, ZeroPoint
from .ff import FieldSpec, field_make

RationalPoint = tuple[int, ...]

POINT_BUDGET = 10**8


@dataclass(frozen=True)
class WeightedSpace:
    weights: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return "P(" + ",".join(map(str, self.weights)) + ")"


def space_make(weights: Sequence[int]) -> WeightedSpace:
    w = tuple(int(x) for x in weights)
    if len(w) < 2:
        raise EmptyWeights(f"need at least two weights, got {w}")
    if any(x < 1 for x in w):
        raise ValueError(f"weights must be positive, got {w}")
    if reduce(gcd, w) != 1:
        raise NonTrivialGcd(f"gcd of weights {w} is {reduce(gcd, w)}, expected 1")
    return WeightedSpace(w)


def scale_point(space: WeightedSpace, F: FieldSpec, coords: Sequence[int], lam: int) -> tuple[int, ...]:
    if lam == 0:
        raise ZeroLambda("scaling factor must be a unit")
    return tuple(F.times(F.power(lam, w), x) for w, x in zip(space.weights, coords))


def _reduced_weights(space: WeightedSpace, coords: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, (w for w, x in zip(space.weights, coords) if x), 0)
    return tuple(w // g for w in space.weights) if g else space.weights


def orbit(space: WeightedSpace, F: FieldSpec, coords: Sequence[int]) -> list[tuple[int, ...]]:
    """The F_q-rational tuples equivalent to ``coords``, one per unit mu."""
    ws = _reduced_weights(space, coords)
    mul = F.mul
    return [tuple(int(mul[F.power(mu, w), x]) for w, x in zip(ws, coords)) for mu in F.units()]


def canonicalize(space: WeightedSpace, F: FieldSpec, coords: Sequence[int]) -> RationalPoint:
    if not any(coords):
        raise ZeroPoint("the origin is not a point of projective space")
    return min(orbit(space, F, coords))


@dataclass(frozen=True)
class PointSet:
    space: WeightedSpace
    field: FieldSpec
    points: tuple[RationalPoint, ...]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[RationalPoint]:
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def to_json(self) -> str:
        doc = {"weights": list(self.space.weights), "q": self.field.q}
        if self.field.modulus is not None:
            doc["modulus"] = list(self.field.modulus)
        doc["points"] = [list(p) for p in self.points]
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        doc = json.loads(text)
        F = field_make(doc["q"], doc.get("modulus"))
        return cls(space_make(doc["weights"]), F, tuple(tuple(p) for p in doc["points"]))


def projective_count(q: int, r: int) -> int:
    """q^{r-1} + ... + q + 1."""
    return sum(q**i for i in range(r))


def enumerate_points(space: WeightedSpace, F: FieldSpec, budget: int = POINT_BUDGET) -> PointSet:
    q, r = F.q, space.r
    if q**r > budget:
        raise BudgetExceeded(f"{q}^{r} tuples exceed the enumeration budget {budget}")
    mul = F.mul
    scalers: dict[tuple[int, ...], list[list[int]]] = {}
    seen: set[RationalPoint] = set()
    for x in product(range(q), repeat=r):
        if not any(x) or x in seen:
            continue
        ws = _reduced_weights(space, x)
        pw = scalers.get(ws)
        if pw is None:
            pw = scalers[ws] = [[F.power(mu, w) for w in ws] for mu in F.units()]
        seen.add(min(tuple(int(mul[s, c]) for s, c in zip(row, x)) for row in pw))
    return PointSet(space, F, tuple(sorted(seen)))


def stratify_p11b(space: WeightedSpace, F: FieldSpec):
    """Strata ``[1:y2:y3]``, ``[0:1:y3]`` and ``[0:0:1]`` of P(1,1,b)(F_q).

    Along x1 = 0 the classes are those of P(1,b): fixing x2 = 1 leaves y3
    free.  Fixing x3 = 1 instead identifies ``[0:y2:1]`` with
    ``[0:zeta*y2:1]`` for b-th roots of unity zeta, so those labels repeat
    when gcd(b, q-1) > 1.  The labels are representatives, not necessarily
    canonical ones.
    """
    w = space.weights
    if len(w) != 3 or w[0] != 1 or w[1] != 1:
        raise WrongWeights(f"stratification needs weights (1,1,b), got {w}")
    els = list(F.elements())
    affine = [(1, y2, y3) for y2 in els for y3 in els]
    line = [(0, 1, y3) for y3 in els]
    return affine, line, [(0, 0, 1)]

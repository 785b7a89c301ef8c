"""Sparse polynomials over GF(q), graded by the weights of a weighted space.

Monomials are exponent tuples; a polynomial maps monomials to nonzero field
reprs.  Evaluation uses the convention 0^0 = 1.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import MismatchedAmbient, NotDivisible
from .ff import FieldSpec
from .wps import WeightedSpace

Monomial = tuple[int, ...]


class _EveryDegree:
    def __repr__(self) -> str:
        return "EVERY_DEGREE"


#: ``homogeneous_degree`` of the zero polynomial.
EVERY_DEGREE = _EveryDegree()


def wdeg(space: WeightedSpace, m: Monomial) -> int:
    return sum(e * w for e, w in zip(m, space.weights))


def monomial_basis(space: WeightedSpace, d: int) -> list[Monomial]:
    """All exponent vectors of weighted degree ``d``, in ascending lex order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    w = space.weights
    out: list[Monomial] = []

    def rec(i: int, rest: int, acc: list[int]) -> None:
        if i == len(w) - 1:
            if rest % w[i] == 0:
                out.append(tuple(acc + [rest // w[i]]))
            return
        for e in range(rest // w[i] + 1):
            rec(i + 1, rest - e * w[i], acc + [e])

    rec(0, d, [])
    out.sort()
    return out


def dim_graded_piece(space: WeightedSpace, d: int) -> int:
    """dim S_d, counted by the coin-change recurrence (no enumeration)."""
    if d < 0:
        return 0
    ways = [1] + [0] * d
    for w in space.weights:
        for n in range(w, d + 1):
            ways[n] += ways[n - w]
    return ways[d]


class GradedPolynomial:
    __slots__ = ("space", "field", "terms")

    def __init__(self, space: WeightedSpace, field: FieldSpec, terms: Mapping[Monomial, int] | None = None):
        self.space = space
        self.field = field
        clean: dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                c = int(c) % field.q if field.k == 1 else int(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def monomial(cls, space, field, exps: Sequence[int], coeff: int = 1) -> "GradedPolynomial":
        return cls(space, field, {tuple(exps): coeff})

    @classmethod
    def variable(cls, space, field, i: int) -> "GradedPolynomial":
        e = [0] * space.r
        e[i] = 1
        return cls.monomial(space, field, e)

    def _check(self, other: "GradedPolynomial") -> None:
        if self.space != other.space or self.field != other.field:
            raise MismatchedAmbient("polynomials live in different rings")

    def _coerce(self, other) -> "GradedPolynomial":
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return GradedPolynomial(self.space, self.field, {(0,) * self.space.r: self.field.from_int(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = F.plus(t.get(m, 0), c)
        return GradedPolynomial(self.space, F, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return GradedPolynomial(self.space, F, {m: F.negate(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        t: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = F.plus(t.get(m, 0), F.times(c1, c2))
        return GradedPolynomial(self.space, F, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = GradedPolynomial(self.space, self.field, {(0,) * self.space.r: 1})
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: int) -> "GradedPolynomial":
        F = self.field
        return GradedPolynomial(self.space, F, {m: F.times(c, v) for m, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.space == other.space and self.field == other.field and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"GradedPolynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def homogeneous_degree(self):
        """Common weighted degree, ``None`` if mixed, :data:`EVERY_DEGREE` if zero."""
        if not self.terms:
            return EVERY_DEGREE
        degs = {wdeg(self.space, m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def divide_by_variable(self, i: int) -> "GradedPolynomial":
        """Exact division by x_{i+1}; every term must be divisible."""
        t = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                raise NotDivisible(f"term {m} is not divisible by x{i + 1}")
            e = list(m)
            e[i] -= 1
            t[tuple(e)] = c
        return GradedPolynomial(self.space, self.field, t)

    def __call__(self, point: Sequence[int]) -> int:
        return poly_eval(self, point)


def poly_eval(f: GradedPolynomial, point: Sequence[int], field: FieldSpec | None = None) -> int:
    if field is not None and field != f.field:
        raise MismatchedAmbient("point and polynomial are over different fields")
    if len(point) != f.space.r:
        raise MismatchedAmbient(f"point has {len(point)} coordinates, ring has {f.space.r} variables")
    F = f.field
    acc = 0
    for m, c in f.terms.items():
        v = c
        for x, e in zip(point, m):
            if e:
                v = F.times(v, F.power(x, e))
        acc = F.plus(acc, v)
    return acc


def poly_arith(op: str, f: GradedPolynomial, g) -> GradedPolynomial:
    """``op`` in add/sub/mul; ``scale`` takes a field repr as ``g``."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown polynomial operation {op!r}")


def homogeneous_degree(f: GradedPolynomial):
    return f.homogeneous_degree()


def evaluation_matrix(monomials: Sequence[Monomial], points: Iterable[Sequence[int]], F: FieldSpec) -> np.ndarray:
    """Row i, column j holds monomial i evaluated at point j."""
    pts = np.asarray(list(points), dtype=np.int64)
    mons = np.asarray(list(monomials), dtype=np.int64)
    if mons.size == 0 or pts.size == 0:
        return np.zeros((len(mons), len(pts)), dtype=F.add.dtype)
    emax = int(mons.max())
    # powtab[x, e] = x^e with 0^0 = 1
    powtab = np.zeros((F.q, emax + 1), dtype=F.add.dtype)
    for x in range(F.q):
        for e in range(emax + 1):
            powtab[x, e] = F.power(x, e)
    out = np.ones((len(mons), len(pts)), dtype=F.add.dtype)
    for i in range(mons.shape[1]):
        out = F.mul[out, powtab[pts[None, :, i], mons[:, i, None]]]
    return out


# --- text format ---------------------------------------------------------

def format_poly(f: GradedPolynomial) -> str:
    if not f.terms:
        return "0"
    parts = []
    for m in sorted(f.terms, reverse=True):
        factors = [str(f.terms[m])]
        for i, e in enumerate(m):
            if e:
                factors.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        parts.append("*".join(factors))
    return "+".join(parts)


_VAR = re.compile(r"x(\d+)(?:\^(\d+))?")
_COEF = re.compile(r"\d+")


def parse_poly(text: str, space: WeightedSpace, field: FieldSpec) -> GradedPolynomial:
    """Parse ``c*x1^a*x2^b`` terms joined by ``+`` (or ``-``).

    ``^1`` may be omitted, as may ``*`` between a coefficient and the first
    variable.  Coefficients are field reprs.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    result = GradedPolynomial(space, field)
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        body = tok.lstrip("+-")
        coeff = 1
        pos = 0
        mc = _COEF.match(body)
        if mc:
            coeff = int(mc.group())
            pos = mc.end()
            if pos < len(body) and body[pos] == "*":
                pos += 1
        exps = [0] * space.r
        while pos < len(body):
            mv = _VAR.match(body, pos)
            if not mv:
                raise ValueError(f"cannot parse term {tok!r}")
            i = int(mv.group(1)) - 1
            if not 0 <= i < space.r:
                raise ValueError(f"variable x{i + 1} outside the {space.r} variables of {space}")
            exps[i] += int(mv.group(2) or 1)
            pos = mv.end()
            if pos < len(body):
                if body[pos] != "*":
                    raise ValueError(f"cannot parse term {tok!r}")
                pos += 1
        if not 0 <= coeff < field.q:
            raise ValueError(f"coefficient {coeff} is not a repr of {field}")
        term = GradedPolynomial(space, field, {tuple(exps): coeff})
        result = result - term if sign < 0 else result + term
    return result

"""Finite fields GF(q), q = p^k.

Elements are plain integers ``0 <= x < q``.  For k > 1 the integer packs the
coefficient tuple of the residue polynomial in base p, lowest degree first,
so ``x = c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  In GF(4) with modulus
t^2 + t + 1 the element t is therefore 2 and t + 1 is 3.

Modulus coefficient sequences are also written lowest degree first:
``(1, 1, 1)`` is t^2 + t + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from .errors import DivisionByZero, NoBuiltinModulus, NotPrimePower, ReducibleModulus

# Fixed conway-like choices, lowest degree first.
BUILTIN_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # t^2 + t + 1
    8: (1, 1, 0, 1),  # t^3 + t + 1
    9: (1, 0, 1),  # t^2 + 1
    16: (1, 1, 0, 0, 1),  # t^4 + t + 1
    25: (2, 1, 1),  # t^2 + t + 2
    27: (1, 2, 0, 1),  # t^3 + 2t + 1
}

OPS = ("add", "sub", "mul", "div", "inv", "pow")


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``, or raise :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    n, p = q, 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise NotPrimePower(f"q={q} has at least two distinct prime factors")
    return p, k


# --- polynomials over GF(p), coefficient lists lowest degree first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    r = [c % p for c in a]
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return _trim(r[:dm])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over GF(p)."""
    m = _trim([c % p for c in modulus])
    k = len(m) - 1
    if k < 1:
        return False
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if not _polymod(m, list(low) + [1], p):
                return False
    return True


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def _decode(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        x, c = divmod(x, p)
        out.append(c)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^k) together with its precomputed operation tables.

    ``add`` and ``mul`` are q x q integer arrays indexed by element reprs; they
    double as vectorised kernels (``spec.add[A, B]`` works on arrays).
    """

    p: int
    k: int
    modulus: tuple[int, ...] | None = None
    add: np.ndarray = field(init=False, repr=False, compare=False)
    mul: np.ndarray = field(init=False, repr=False, compare=False)
    neg: np.ndarray = field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p, k, q = self.p, self.k, self.q
        digits = np.array([_decode(x, p, k) for x in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                if k == 1:
                    c = a * b % p
                else:
                    prod = [0] * (2 * k - 1)
                    for i, x in enumerate(digits[a]):
                        if x:
                            for j, y in enumerate(digits[b]):
                                prod[i + j] += int(x) * int(y)
                    c = _encode(_polymod(prod, self.modulus, p), p)
                mul[a, b] = mul[b, a] = c
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
        dtype = np.uint8 if q <= 256 else np.int64
        for name, arr in (("add", add), ("mul", mul), ("neg", neg), ("inv_table", inv)):
            arr = arr.astype(dtype)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def q(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"GF({self.q})"

    # scalar arithmetic on reprs
    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def minus(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def negate(self, a: int) -> int:
        return int(self.neg[a])

    def inverse(self, a: int) -> int:
        if a % self.q == 0:
            raise DivisionByZero(f"0 has no inverse in {self}")
        return int(self.inv_table[a])

    def divide(self, a: int, b: int) -> int:
        return self.times(a, self.inverse(b))

    def power(self, a: int, n: int) -> int:
        if n < 0:
            return self.power(self.inverse(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.q - 1
        result, base = 1, a
        while n:
            if n & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(q)."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def format(self, x: int) -> str:
        """Human readable form, e.g. ``a+1`` for the element 3 of GF(4)."""
        if self.k == 1:
            return str(x)
        terms = []
        for i, c in reversed(list(enumerate(_decode(x, self.p, self.k)))):
            if not c:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            coef = "" if (c == 1 and mono) else str(c)
            terms.append(coef + mono)
        return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def _cached_field(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, k, modulus)


def field_make(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(q).

    Prime fields ignore ``modulus``.  For k > 1 the modulus must be monic of
    degree k and irreducible over GF(p); without one the built-in table is
    consulted.
    """
    p, k = prime_power(q)
    if k == 1:
        return _cached_field(p, 1, None)
    if modulus is None:
        if q not in BUILTIN_MODULI:
            raise NoBuiltinModulus(f"no built-in modulus for q={q}; supply one")
        modulus = BUILTIN_MODULI[q]
    mod = tuple(int(c) % p for c in modulus)
    if len(mod) != k + 1 or mod[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {k}, got {tuple(modulus)}")
    if not is_irreducible(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")
    return _cached_field(p, k, mod)


def field_arith(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of :data:`OPS`; ``b`` is the exponent for ``pow``."""
    if op == "add":
        return spec.plus(a, b)
    if op == "sub":
        return spec.minus(a, b)
    if op == "mul":
        return spec.times(a, b)
    if op == "div":
        return spec.divide(a, b)
    if op == "inv":
        return spec.inverse(a)
    if op == "pow":
        return spec.power(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def field_elements(spec: FieldSpec) -> tuple[int, ...]:
    return tuple(spec.elements())

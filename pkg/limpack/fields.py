"""Finite fields GF(q) and projective points over them.

Prime q uses modular arithmetic. The prime powers 4, 8 and 9 are built from fixed
irreducible polynomials (x²+x+1 and x³+x+1 over GF(2), x²+1 over GF(3)); an element
is encoded as the integer whose base-p digits are its polynomial coefficients,
lowest degree first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from limpack.errors import InputError

# q -> (characteristic, irreducible polynomial coefficients, lowest degree first)
PRIME_POWER_MODULI = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, digit = divmod(value, p)
        out.append(digit)
    return out


def _encode(digits: list[int], p: int) -> int:
    return sum(d * p ** i for i, d in enumerate(digits))


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    m = len(modulus) - 1
    product = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] = (product[i + j] + x * y) % p
    # reduce with the monic modulus, highest degree first
    for degree in range(len(product) - 1, m - 1, -1):
        lead = product[degree]
        if lead:
            for i, coefficient in enumerate(modulus):
                product[degree - m + i] = (product[degree - m + i] - lead * coefficient) % p
    return product[:m]


class GaloisField:
    def __init__(self, q: int):
        self.q = q
        if is_prime(q):
            self.p, self.prime = q, True
            return
        if q not in PRIME_POWER_MODULI:
            supported = ', '.join(str(x) for x in sorted(PRIME_POWER_MODULI))
            raise InputError(f"q must be a prime or one of the prime powers {supported}, got {q}")
        self.prime = False
        self.p, modulus = PRIME_POWER_MODULI[q]
        m = len(modulus) - 1
        elements = [_digits(a, self.p, m) for a in range(q)]
        self._add = [[_encode([(x + y) % self.p for x, y in zip(elements[a], elements[b])], self.p)
                      for b in range(q)] for a in range(q)]
        self._mul = [[_encode(_poly_mul_mod(elements[a], elements[b], modulus, self.p), self.p)
                      for b in range(q)] for a in range(q)]
        self._neg = [_encode([(-x) % self.p for x in elements[a]], self.p) for a in range(q)]
        self._inv = {a: b for a in range(1, q) for b in range(1, q) if self._mul[a][b] == 1}

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q if self.prime else self._add[a][b]

    def neg(self, a: int) -> int:
        return (-a) % self.q if self.prime else self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q if self.prime else self._mul[a][b]

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        return pow(a, self.q - 2, self.q) if self.prime else self._inv[a]

    def dot(self, u, w) -> int:
        total = 0
        for a, b in zip(u, w):
            total = self.add(total, self.mul(a, b))
        return total


@lru_cache(maxsize=None)
def get_field(q: int) -> GaloisField:
    return GaloisField(q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: int

    def __post_init__(self):
        get_field(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise InputError(f"{self.value} is not an element of GF({self.modulus})")

    @property
    def field(self) -> GaloisField:
        return get_field(self.modulus)

    def _same(self, other: FieldElement) -> None:
        if other.modulus != self.modulus:
            raise InputError(f"cannot combine elements of GF({self.modulus}) and GF({other.modulus})")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.field.add(self.value, other.value), self.modulus)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.field.sub(self.value, other.value), self.modulus)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.field.mul(self.value, other.value), self.modulus)

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field.neg(self.value), self.modulus)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.modulus)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __bool__(self) -> bool:
        return self.value != 0


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Canonical representative of a line through the origin: first nonzero coordinate is 1."""

    coords: tuple[int, ...]
    q: int

    @classmethod
    def normalize(cls, vector, q: int) -> ProjectivePoint:
        field = get_field(q)
        values = tuple(int(x) % q if field.prime else int(x) for x in vector)
        lead = next((x for x in values if x != 0), None)
        if lead is None:
            raise InputError("the zero vector is not a projective point")
        scale = field.inv(lead)
        return cls(tuple(field.mul(x, scale) for x in values), q)

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(x, self.q) for x in self.coords)

    def dot(self, other: ProjectivePoint) -> int:
        return get_field(self.q).dot(self.coords, other.coords)

    def is_isotropic(self) -> bool:
        """Self-orthogonal: ⟨x, x⟩ = 0."""
        return self.dot(self) == 0


def projective_points(length: int, q: int) -> list[ProjectivePoint]:
    """All points of the projective space of GF(q)^length in lexicographic order."""
    get_field(q)
    points = []
    for lead in range(length):
        for tail in itertools.product(range(q), repeat=length - lead - 1):
            points.append(ProjectivePoint((0,) * lead + (1,) + tail, q))
    return sorted(points)

"""Table-backed arithmetic in small finite fields GF(p^e).

Elements are plain integers in ``range(q)``.  For a prime field an element is
its residue; for an extension field it is the base-``p`` integer whose
little-endian digits are the polynomial coefficients over GF(p), so ``x`` in
GF(4) is ``2`` and ``x + 1`` is ``3``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from qsrg.errors import DivisionByZero, InvalidElement, InvalidField

MAX_ORDER = 16

# ascending coefficients
DEFAULT_MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise InvalidField otherwise."""
    if q < 2:
        raise InvalidField(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not _is_prime(p):
        raise InvalidField(f"{q} is not a prime power")
    return p, e


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm]


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = tuple(low) + (1,)
            if not any(_poly_mod(list(modulus), divisor, p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^e) together with its defining modulus.

    ``modulus`` lists ascending coefficients of a monic irreducible
    polynomial of degree ``e`` over GF(p) and is ``None`` for prime fields.
    Addition, multiplication, negation and inverse tables are built on first
    use and shared by every operation on this spec.
    """

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidField(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise InvalidField("extension degree must be >= 1")
        if self.p**self.e > MAX_ORDER:
            raise InvalidField(f"q = {self.p ** self.e} exceeds supported maximum {MAX_ORDER}")
        if self.e == 1:
            if self.modulus is not None:
                raise InvalidField("prime fields take no modulus")
            return
        if self.modulus is None:
            raise InvalidField("extension fields need a modulus")
        mod = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.e + 1 or any(not 0 <= c < self.p for c in mod):
            raise InvalidField(f"modulus {mod} is not a degree-{self.e} polynomial over GF({self.p})")
        if mod[-1] != 1:
            raise InvalidField(f"modulus {mod} is not monic")
        if not _is_irreducible(mod, self.p):
            raise InvalidField(f"modulus {mod} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p**self.e

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, modulus={list(self.modulus)})"

    # -- tables ---------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, digits) -> int:
        n = 0
        for d in reversed(digits):
            n = n * self.p + d
        return n

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        q, p = self.q, self.p
        if self.e == 1:
            return tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        digits = [self._digits(a) for a in range(q)]
        return tuple(
            tuple(self._undigits([(x + y) % p for x, y in zip(digits[a], digits[b])]) for b in range(q))
            for a in range(q)
        )

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        q, p = self.q, self.p
        if self.e == 1:
            return tuple(tuple(a * b % p for b in range(q)) for a in range(q))
        digits = [self._digits(a) for a in range(q)]
        rows = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = [0] * (2 * self.e - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                row.append(self._undigits(_poly_mod(prod, self.modulus, p)))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        add = self.add_table
        return tuple(add[a].index(0) for a in range(self.q))

    @cached_property
    def inv_table(self) -> tuple[int | None, ...]:
        mul = self.mul_table
        return (None,) + tuple(mul[a].index(1) for a in range(1, self.q))

    # -- element operations ---------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise InvalidElement(f"{a!r} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return self.add_table[self.check(a)][self.check(b)]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[self.check(a)][self.neg_table[self.check(b)]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[self.check(a)][self.check(b)]

    def neg(self, a: int) -> int:
        return self.neg_table[self.check(a)]

    def inv(self, a: int) -> int:
        if self.check(a) == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        d = {"p": self.p, "e": self.e}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d

    @classmethod
    def from_json(cls, d: dict) -> FieldSpec:
        try:
            mod = d.get("modulus")
            return cls(int(d["p"]), int(d.get("e", 1)), tuple(mod) if mod is not None else None)
        except (KeyError, TypeError) as exc:
            raise InvalidField(f"malformed field description {d!r}") from exc


_FIELDS: dict[int, FieldSpec] = {}


def GF(q: int, modulus=None) -> FieldSpec:
    """Return the field of order ``q``, using the built-in modulus unless overridden.

    Default-modulus fields are cached so their tables are built only once.
    """
    p, e = prime_power(q)
    if modulus is not None:
        return FieldSpec(p, e, tuple(modulus) if e > 1 else None)
    if q not in _FIELDS:
        if e > 1 and q not in DEFAULT_MODULI:
            raise InvalidField(f"no default modulus for GF({q})")
        _FIELDS[q] = FieldSpec(p, e, DEFAULT_MODULI.get(q))
    return _FIELDS[q]


def field_arith(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of ``add``, ``mul``, ``neg``, ``inv`` (and ``sub``) by name."""
    if op in ("add", "mul", "sub"):
        if b is None:
            raise InvalidElement(f"{op} needs two operands")
        return getattr(spec, op)(a, b)
    if op in ("neg", "inv"):
        return getattr(spec, op)(a)
    raise ValueError(f"unknown field operation {op!r}")

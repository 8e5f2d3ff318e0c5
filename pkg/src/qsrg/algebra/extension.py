"""GF(q^t) as a t-dimensional vector space over GF(q), for field reduction.

Extension elements are coefficient tuples over the base field ``F`` modulo a
monic irreducible polynomial of degree ``t`` over ``F``.  Nothing here goes
through FieldSpec tables for the big field, so q^t may exceed 16.
"""

from __future__ import annotations

import itertools

from qsrg.algebra.field import DEFAULT_MODULI, FieldSpec


def _poly_rem(a: list[int], m: tuple[int, ...], F: FieldSpec) -> list[int]:
    # m is monic
    add, mul, neg = F.add_table, F.mul_table, F.neg_table
    a = list(a)
    d = len(m) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i]
        if c:
            nc = neg[c]
            for j in range(d + 1):
                a[i - d + j] = add[a[i - d + j]][mul[nc][m[j]]]
    return a[:d]


def is_irreducible_over(poly: tuple[int, ...], F: FieldSpec) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(F.q), repeat=d):
            if not any(_poly_rem(list(poly), tuple(low) + (1,), F)):
                return False
    return True


def extension_modulus(F: FieldSpec, t: int) -> tuple[int, ...]:
    """Ascending coefficients of the defining polynomial of GF(q^t) over ``F``.

    Over a prime field the built-in modulus of GF(q^t) is reused when one
    exists; otherwise the first monic irreducible in lexicographic order of
    its low coefficients is taken.
    """
    if F.e == 1 and F.q**t in DEFAULT_MODULI:
        return DEFAULT_MODULI[F.q**t]
    for low in itertools.product(range(F.q), repeat=t):
        poly = tuple(low) + (1,)
        if low[0] and is_irreducible_over(poly, F):
            return poly
    raise AssertionError("irreducible polynomials exist in every degree")


def times_x(a: tuple[int, ...], modulus: tuple[int, ...], F: FieldSpec) -> tuple[int, ...]:
    """Multiply the extension element ``a`` by the generator x."""
    return tuple(_poly_rem([0] + list(a), modulus, F))


def extension_elements(F: FieldSpec, t: int):
    return list(itertools.product(range(F.q), repeat=t))


def projective_points_over_extension(F: FieldSpec, t: int, n: int):
    """Normalized vectors of PG(n-1, q^t); each entry is a coefficient tuple."""
    one = (1,) + (0,) * (t - 1)
    zero = (0,) * t
    elems = extension_elements(F, t)
    for pivot in range(n):
        for tail in itertools.product(elems, repeat=n - pivot - 1):
            yield (zero,) * pivot + (one,) + tail

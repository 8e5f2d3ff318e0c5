"""Arithmetic necessary conditions on SRG parameters."""

from __future__ import annotations

from typing import NamedTuple, Optional

from qsrg.algebra import bracket


class IdentityCheck(NamedTuple):
    holds: bool
    lhs: int
    rhs: int


def parameter_identity(v: int, k: int, lambda_: int, mu: int, q: int) -> IdentityCheck:
    """Evaluate ([k+1]_q - 1)([k+1]_q - 2 - lambda) = ([v]_q - [k+1]_q) mu.

    With q = 1 this is the classical k(k - 1 - lambda) = (v - k - 1) mu.
    """
    nk = bracket(k + 1, q)
    lhs = (nk - 1) * (nk - 2 - lambda_)
    rhs = (bracket(v, q) - nk) * mu
    return IdentityCheck(lhs == rhs, lhs, rhs)


def _bracket_log(n: int, q: int) -> Optional[int]:
    a = 0
    while bracket(a, q) < n:
        a += 1
    return a if bracket(a, q) == n else None


def projective_count_decompose(lambda_: int, mu: int, q: int) -> Optional[tuple[int, int]]:
    """Return (l, m) with lambda = [l]_q - 2 and mu = [m]_q, or None.

    Common neighborhoods in a strongly regular q-ary graph are subspaces, so
    lambda + 2 and mu must both count the points of some projective space.
    """
    if q < 2:
        raise ValueError("projective_count_decompose needs a genuine field order q >= 2")
    if lambda_ < 0 or mu < 0:
        return None
    l = _bracket_log(lambda_ + 2, q)
    m = _bracket_log(mu, q)
    if l is None or m is None:
        return None
    return l, m

"""q-integers and Gaussian binomial coefficients (exact integer arithmetic)."""


def bracket(a: int, q: int) -> int:
    """The q-integer [a]_q = 1 + q + ... + q^(a-1).

    ``q = 1`` is allowed and gives ``a``.  This is the number of points of
    PG(a-1, q) when q is a prime power.
    """
    if a < 0 or q < 1:
        raise ValueError(f"bracket needs a >= 0 and q >= 1, got a={a}, q={q}")
    if q == 1:
        return a
    return (q**a - 1) // (q - 1)


def gaussian(v: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^v; 0 when k > v."""
    if v < 0 or k < 0 or q < 2:
        raise ValueError(f"gaussian needs v, k >= 0 and q >= 2, got v={v}, k={k}, q={q}")
    if k > v:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (v - i) - 1
        den *= q ** (k - i) - 1
    return num // den

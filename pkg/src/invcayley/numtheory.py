"""Small-integer number theory helpers (trial division is plenty here)."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as ``{p: e}`` in increasing ``p``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``n == p**k`` and ``k >= 1``, else None."""
    if n < 2:
        return None
    f = factorize(n)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0

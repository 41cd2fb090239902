"""Small modular-arithmetic helpers for the residue-field models."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root(q: int) -> int:
    """Smallest primitive root mod a prime q."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q == 2:
        return 1
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return g
    raise RuntimeError(f"no primitive root found mod {q}")  # unreachable for prime q


def discrete_log(base: int, value: int, q: int, order: int) -> int:
    """Smallest k in [0, order) with base^k = value mod q."""
    acc = 1
    for k in range(order):
        if acc == value % q:
            return k
        acc = acc * base % q
    raise ValueError(f"{value} is not a power of {base} mod {q}")


def smallest_split_prime(p: int) -> int:
    """Smallest prime q with q = 1 mod p."""
    q = p + 1
    while not (is_prime(q) and q % p == 1):
        q += p
    return q

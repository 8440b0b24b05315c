"""Number-theoretic verifiers: primality, emirps, factorization, semiprimes.

Primality is deterministic Miller-Rabin with the 12-witness set that is
exact for all n < 2^64; factorization is trial division with a
Brent-Pollard rho fallback for large cofactors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Exact for every n below 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_LIMIT = 1 << 64


@dataclass(frozen=True)
class FactorizationResult:
    """Prime factorization as sorted (prime, exponent) pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def recompose(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def num_prime_factors(self) -> int:
        """Prime factors counted with multiplicity (Omega)."""
        return sum(e for _, e in self.factors)


def is_prime(n: int) -> bool:
    if n >= _LIMIT:
        raise ValueError("primality test is deterministic only below 2^64")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def reverse_decimal(n: int) -> int:
    """Decimal digit reversal; leading zeros drop."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return int(str(n)[::-1])


def is_emirp(n: int) -> bool:
    """Prime whose decimal reversal is a *different* prime
    (palindromic primes do not count)."""
    if n < 0 or not is_prime(n):
        return False
    rev = reverse_decimal(n)
    return rev != n and is_prime(rev)


def _brent_rho(n: int) -> int:
    """A non-trivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> FactorizationResult:
    """Full prime factorization of n >= 2."""
    if n < 2:
        raise ValueError("factorization needs n >= 2")
    remaining = n
    powers: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while remaining % p == 0:
            powers[p] = powers.get(p, 0) + 1
            remaining //= p
    d = 49
    while d * d <= remaining and d < 100_000:
        while remaining % d == 0:
            powers[d] = powers.get(d, 0) + 1
            remaining //= d
        d += 2
    if remaining > 1:
        _factor_into(remaining, powers)
    return FactorizationResult(n, tuple(sorted(powers.items())))


def is_semiprime(n: int) -> bool:
    """Exactly two prime factors counted with multiplicity."""
    if n < 4:
        return False
    return factorize(n).num_prime_factors() == 2

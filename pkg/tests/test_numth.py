from __future__ import annotations

import numpy as np
import pytest

from oracles import trial_division_factorize, trial_division_is_prime
from toracrypt import factorize, is_emirp, is_prime, is_semiprime, reverse_decimal


class TestIsPrime:
    def test_headline_values(self):
        assert is_prime(304807)
        assert is_prime(613)
        assert is_prime(3)
        assert is_prime(708403)

    def test_edge_cases(self):
        assert not is_prime(0)
        assert not is_prime(1)
        assert is_prime(2)
        assert not is_prime(4)

    def test_agrees_with_trial_division_small(self):
        for n in range(2000):
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_agrees_with_trial_division_sampled(self):
        rng = np.random.default_rng(3)
        for n in rng.integers(2, 10**6, 300):
            n = int(n)
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_strong_pseudoprimes_rejected(self):
        # Carmichael numbers and 64-bit-hard composites.
        for n in (561, 1105, 6601, 3215031751, 3825123056546413051):
            assert not is_prime(n)

    def test_large_input_guard(self):
        with pytest.raises(ValueError):
            is_prime(1 << 64)


class TestReverseDecimal:
    def test_headline_value(self):
        assert reverse_decimal(304807) == 708403

    def test_palindrome(self):
        assert reverse_decimal(7) == 7

    def test_leading_zeros_drop(self):
        assert reverse_decimal(120) == 21

    def test_involution_without_trailing_zeros(self):
        rng = np.random.default_rng(5)
        for n in rng.integers(0, 10**9, 200):
            n = int(n)
            if n % 10 == 0 and n != 0:
                continue
            assert reverse_decimal(reverse_decimal(n)) == n

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            reverse_decimal(-1)


class TestIsEmirp:
    def test_headline_value(self):
        assert is_emirp(304807)

    def test_simple_emirp(self):
        assert is_emirp(13)  # 31 is prime

    def test_palindromic_prime_is_not_an_emirp(self):
        assert not is_emirp(11)
        assert not is_emirp(7)

    def test_composite_is_not_an_emirp(self):
        assert not is_emirp(15)

    def test_prime_with_composite_reversal(self):
        assert not is_emirp(23)  # 32 = 2^5

    def test_definition_cross_check(self):
        for n in range(2, 3000):
            expected = (
                trial_division_is_prime(n)
                and trial_division_is_prime(reverse_decimal(n))
                and reverse_decimal(n) != n
            )
            assert is_emirp(n) == expected, n


class TestFactorize:
    def test_1839(self):
        assert factorize(1839).factors == ((3, 1), (613, 1))

    def test_1679(self):
        assert factorize(1679).factors == ((23, 1), (73, 1))

    def test_prime_power(self):
        assert factorize(8).factors == ((2, 3),)

    def test_recomposes_sampled(self):
        rng = np.random.default_rng(7)
        for n in rng.integers(2, 10**6, 200):
            n = int(n)
            result = factorize(n)
            assert result.recompose() == n
            assert all(is_prime(p) for p, _ in result.factors)
            assert result.factors == tuple(trial_division_factorize(n))

    def test_large_semiprime_via_rho(self):
        p, q = 1_000_003, 1_000_033
        result = factorize(p * q)
        assert result.factors == ((p, 1), (q, 1))

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            factorize(1)


class TestIsSemiprime:
    def test_headline_values(self):
        assert is_semiprime(1679)
        assert is_semiprime(1839)

    def test_counterexamples(self):
        assert not is_semiprime(12)  # 2*2*3
        assert not is_semiprime(13)  # prime
        assert not is_semiprime(1)

    def test_square_of_prime_counts(self):
        assert is_semiprime(4)
        assert is_semiprime(9)

    def test_products_of_random_primes(self):
        rng = np.random.default_rng(9)
        primes = [n for n in range(2, 10**4) if trial_division_is_prime(n)]
        for _ in range(100):
            p, q = (primes[i] for i in rng.integers(0, len(primes), 2))
            assert is_semiprime(p * q)

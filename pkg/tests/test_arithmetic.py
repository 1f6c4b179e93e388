import math

import pytest
from hypothesis import given, strategies as st

from residuo.arithmetic import (
    factorize,
    gcd,
    is_prime,
    jacobi,
    mod_inverse,
    mod_pow,
    trial_division,
    valuation,
)
from residuo.errors import (
    InvalidInput,
    InvalidModulus,
    NotInvertible,
    UndefinedValuation,
)


class TestModPow:
    def test_examples(self):
        assert mod_pow(4, 3, 13) == 12
        assert mod_pow(7, 0, 10) == 1
        assert mod_pow(0, 5, 7) == 0

    def test_small_modulus_rejected(self):
        with pytest.raises(InvalidModulus):
            mod_pow(2, 3, 1)

    @given(
        st.integers(0, 100), st.integers(0, 100), st.integers(2, 1000)
    )
    def test_agrees_with_naive(self, base, exp, mod):
        naive = 1
        for _ in range(exp):
            naive = naive * base % mod
        assert mod_pow(base, exp, mod) == naive


class TestGcd:
    def test_examples(self):
        assert gcd(12, 18) == 6
        assert gcd(1, 997) == 1
        assert gcd(65, 39) == 13
        assert gcd(0, 0) == 0

    @given(st.integers(0, 10**9), st.integers(0, 10**9))
    def test_divides_both(self, a, b):
        g = gcd(a, b)
        if g:
            assert a % g == 0 and b % g == 0


class TestValuation:
    def test_examples(self):
        assert valuation(64, 2) == 6
        assert valuation(38, 2) == 1
        assert valuation(12, 2) == 2

    def test_zero_rejected(self):
        with pytest.raises(UndefinedValuation):
            valuation(0, 2)

    @pytest.mark.parametrize("b", [2, 3, 5, 7])
    def test_divides_exactly(self, b):
        for n in range(1, 3000):
            k = valuation(n, b)
            assert n % b**k == 0 and n % b ** (k + 1) != 0


class TestJacobi:
    def test_examples(self):
        assert jacobi(3, 65) == -1
        assert jacobi(1, 9999) == 1
        assert jacobi(2, 11021) == -1

    def test_even_modulus_rejected(self):
        with pytest.raises(InvalidModulus):
            jacobi(3, 10)

    def test_zero_on_shared_factor(self):
        assert jacobi(6, 9) == 0
        assert jacobi(5, 15) == 0

    def test_congruence_invariance(self):
        for n in range(3, 200, 2):
            for a in range(1, n):
                if math.gcd(a, n) == 1:
                    assert jacobi(a + 3 * n, n) == jacobi(a, n)

    def test_multiplicativity(self):
        for n in range(3, 100, 2):
            units = [a for a in range(1, n) if math.gcd(a, n) == 1]
            for a in units[:20]:
                for b in units[:20]:
                    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


class TestIsPrime:
    def test_examples(self):
        assert is_prime(13)
        assert not is_prime(1)
        assert not is_prime(11021)

    def test_against_sieve(self):
        limit = 10000
        sieve = bytearray([1]) * (limit + 1)
        sieve[0] = sieve[1] = 0
        for i in range(2, int(limit**0.5) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        for n in range(limit + 1):
            assert is_prime(n) == bool(sieve[n])

    def test_large_prime(self):
        # 2^89 - 1 is a Mersenne prime, above the deterministic threshold.
        assert is_prime(2**89 - 1)
        assert not is_prime((2**89 - 1) * (2**61 - 1))


class TestFactorize:
    def test_examples(self):
        assert factorize(65).factors == ((5, 1), (13, 1))
        assert factorize(195).factors == ((3, 1), (5, 1), (13, 1))
        assert factorize(11009).factors == ((101, 1), (109, 1))

    def test_reconstructs(self):
        for n in range(1, 5000):
            fact = factorize(n)
            assert fact.value == n
            primes = fact.primes()
            assert primes == sorted(primes)
            assert all(is_prime(p) for p in primes)

    def test_rho_path(self):
        n = 1000003 * 1000033
        assert factorize(n).factors == ((1000003, 1), (1000033, 1))

    def test_rejects_zero(self):
        with pytest.raises(InvalidInput):
            factorize(0)


class TestTrialDivision:
    def test_examples(self):
        assert trial_division(65, 10) == ([(5, 1)], 13)
        assert trial_division(11021, 50) == ([], 11021)
        assert trial_division(8, 2) == ([(2, 3)], 1)

    def test_reconstructs_and_strips(self):
        for n in range(1, 2000):
            for bound in (2, 10, 50):
                found, cofactor = trial_division(n, bound)
                product = cofactor
                for p, e in found:
                    product *= p**e
                assert product == n
                assert all(cofactor % d for d in range(2, bound + 1))


class TestModInverse:
    def test_examples(self):
        assert mod_inverse(5, 8) == 5
        assert mod_inverse(1, 97) == 1
        assert mod_inverse(3, 7) == 5

    def test_shared_factor_rejected(self):
        with pytest.raises(NotInvertible):
            mod_inverse(6, 9)

    @given(st.integers(2, 10**6), st.integers(1, 10**6))
    def test_inverse_property(self, n, a):
        if math.gcd(a, n) == 1:
            x = mod_inverse(a, n)
            assert 1 <= x < n and a * x % n == 1

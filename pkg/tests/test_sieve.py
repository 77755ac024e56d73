import math

import numpy as np
import pytest
from scipy.integrate import quad

from omegastar.sieve import (
    ResourceLimitError,
    factorize,
    is_prime,
    log_integral,
    prime_count,
    primes_in_ap,
    sieve_primes,
)

from conftest import trial_division_is_prime, trial_division_primes


class TestSievePrimes:
    def test_first_primes(self):
        assert sieve_primes(10).primes.tolist() == [2, 3, 5, 7]

    def test_limit_one_is_empty(self):
        t = sieve_primes(1)
        assert t.primes.size == 0
        assert t.count() == 0

    def test_limit_zero(self):
        assert sieve_primes(0).primes.size == 0

    def test_hundred_against_trial_division(self):
        t = sieve_primes(100)
        assert t.count() == 25
        assert t.primes.tolist() == trial_division_primes(100)

    def test_flags_match_trial_division_to_1e4(self):
        t = sieve_primes(10**4)
        for n in range(10**4 + 1):
            assert bool(t.is_prime[n]) == trial_division_is_prime(n), n

    def test_table_invariants(self):
        t = sieve_primes(10**5)
        flagged = np.flatnonzero(np.frombuffer(bytes(t.is_prime), dtype=np.uint8))
        assert np.array_equal(flagged, t.primes)
        assert np.all(np.diff(t.primes) > 0)
        assert t.primes[0] == 2

    def test_segmented_matches_unsegmented(self):
        limit = 10**6
        seg = sieve_primes(limit, segment_size=1 << 16)
        whole = sieve_primes(limit, segment_size=limit + 1)
        assert seg.is_prime == whole.is_prime
        assert np.array_equal(seg.primes, whole.primes)

    def test_ceiling_enforced(self, monkeypatch):
        monkeypatch.setenv("OMEGASTAR_CEILING", "1000")
        with pytest.raises(ResourceLimitError):
            sieve_primes(2000)

    def test_negative_limit_rejected(self):
        with pytest.raises(ValueError):
            sieve_primes(-1)


class TestIsPrime:
    def test_small_cases(self):
        assert not is_prime(1)
        assert is_prime(2)
        assert not is_prime(561)  # 3 * 11 * 17, a Carmichael number

    def test_against_trial_division(self):
        for n in range(10**4):
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_large_known_values(self):
        assert is_prime(2**61 - 1)  # Mersenne prime
        assert not is_prime(2**62 - 1)
        assert is_prime(9223372036854775783)  # largest prime below 2^63


class TestFactorize:
    def test_twelve(self):
        assert factorize(12).factors == [(2, 2), (3, 1)]

    def test_one_has_empty_factor_list(self):
        assert factorize(1).factors == []

    def test_primorial_19(self):
        f = factorize(9699690)
        assert f.factors == [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1)]
        assert f.rebuild() == 9699690

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factorize(0)

    def test_roundtrip_and_primality_consistency(self):
        # one sweep over [1, 1e5]: rebuild identity, listed primes prime,
        # ascending order, and is_prime <=> single factor with exponent 1
        for n in range(1, 10**5 + 1):
            f = factorize(n)
            assert f.rebuild() == n
            ps = [p for p, _ in f.factors]
            assert ps == sorted(ps)
            assert all(is_prime(p) for p in ps)
            if n >= 2:
                assert is_prime(n) == (f.factors == [(n, 1)])

    def test_roundtrip_sampled_to_1e6(self):
        # exhaustive [1, 1e5] is covered above; sample density beyond
        for n in range(10**5 + 1, 10**6 + 1, 293):
            f = factorize(n)
            assert f.rebuild() == n

    def test_large_semiprime(self):
        p, q = 1000003, 1000033
        f = factorize(p * q)
        assert f.factors == [(p, 1), (q, 1)]

    def test_large_square(self):
        p = 1000003
        assert factorize(p * p).factors == [(p, 1 + 1)]

    def test_squarefree_flag(self):
        assert factorize(30).is_squarefree()
        assert not factorize(12).is_squarefree()


class TestPrimeCount:
    def test_examples(self):
        assert prime_count(2) == 1
        assert prime_count(100) == 25
        assert prime_count(10**6) == 78498

    def test_small_edge(self):
        assert prime_count(0) == 0
        assert prime_count(1) == 0


class TestPrimesInAp:
    def test_examples(self):
        assert primes_in_ap(20, 4, 1) == 3  # 5, 13, 17
        assert primes_in_ap(10, 2, 1) == 3  # 3, 5, 7
        for x in (10, 100, 1000):
            assert primes_in_ap(x, 1, 0) == prime_count(x)

    def test_residue_partition(self):
        table = sieve_primes(10**5)
        for x in (100, 1234, 10**5):
            total = prime_count(x, table=table)
            for d in range(1, 11):
                assert sum(primes_in_ap(x, d, a, table=table) for a in range(d)) == total

    def test_enumeration_oracle(self, oracle_primes_2000):
        for d, a in [(3, 1), (5, 2), (7, 0), (10, 9)]:
            expected = sum(1 for p in oracle_primes_2000 if p % d == a)
            assert primes_in_ap(2000, d, a) == expected

    def test_bad_args(self):
        with pytest.raises(ValueError):
            primes_in_ap(10, 0, 0)
        with pytest.raises(ValueError):
            primes_in_ap(10, 3, 3)


class TestLogIntegral:
    def test_empty_integral(self):
        assert log_integral(2) == 0.0

    def test_against_quadrature_oracle(self):
        # adaptive-quadrature oracle at x = 10 (QUADPACK's reported error bound
        # is conservative; the values themselves agree to ~1e-13)
        expected, _ = quad(lambda t: 1.0 / math.log(t), 2, 10, epsabs=1e-12)
        assert abs(log_integral(10.0) - expected) <= 1e-9

    def test_against_high_precision_oracle(self):
        # arbitrary-precision li(x) - li(2) from mpmath, a fully independent path
        import mpmath

        mpmath.mp.dps = 30
        for x in (10.0, 100.0, 1e4, 1e6):
            expected = float(mpmath.li(x) - mpmath.li(2))
            assert abs(log_integral(x) - expected) <= 1e-9, x

    def test_ratio_to_prime_count(self):
        assert 1.0 < log_integral(10**6) / prime_count(10**6) < 1.01

    def test_monotone(self):
        xs = [2, 2.5, 3, 5, 10, 100, 1e4]
        vals = [log_integral(x) for x in xs]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_integral(1.5)

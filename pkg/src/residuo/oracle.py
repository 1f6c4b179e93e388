"""The CRS(k) oracle abstraction: something that answers 2^k-th power
residue symbol queries (m|n)_{2^k}, with call accounting.

Three interchangeable implementations are provided: the factoring oracle
(Euler criterion over the factorization of n; the reference), the
definition oracle (exhaustive solvability search per prime; the
independent cross-check), and the Zolotarev oracle (permutation signs for
prime and semiprime moduli; the third route).
"""

import math
import threading
from dataclasses import dataclass, field

from .arithmetic import Factorization, factorize, is_prime
from .errors import InvalidInput, NotAdmissibleModulus, NotCoprime, SearchSpaceTooLarge
from .symbols import symbol_composite, symbol_prime_definition
from .zolotarev import zolotarev_prime, zolotarev_semiprime


@dataclass
class OracleStats:
    """Query accounting: total calls, calls per level k, largest k seen."""

    calls_total: int = 0
    calls_by_k: dict = field(default_factory=dict)
    max_k_seen: int = 0

    def record(self, k):
        self.calls_total += 1
        self.calls_by_k[k] = self.calls_by_k.get(k, 0) + 1
        if k > self.max_k_seen:
            self.max_k_seen = k

    def snapshot(self):
        return OracleStats(self.calls_total, dict(self.calls_by_k), self.max_k_seen)

    def since(self, earlier):
        """Stats for the queries issued after `earlier` was snapshot."""
        by_k = {
            k: v - earlier.calls_by_k.get(k, 0)
            for k, v in self.calls_by_k.items()
            if v - earlier.calls_by_k.get(k, 0) > 0
        }
        return OracleStats(
            self.calls_total - earlier.calls_total, by_k, max(by_k, default=0)
        )

    def to_json(self):
        return {
            "calls_total": self.calls_total,
            "calls_by_k": {str(k): v for k, v in sorted(self.calls_by_k.items())},
            "max_k_seen": self.max_k_seen,
        }


class CrsOracle:
    """Base class: validates queries, keeps stats, delegates evaluation."""

    def __init__(self):
        self.stats = OracleStats()
        self._lock = threading.Lock()

    def crs_query(self, m, n, k):
        if k < 1:
            raise InvalidInput(f"k must be >= 1, got {k}")
        if n < 2:
            raise InvalidInput(f"n must be >= 2, got {n}")
        if math.gcd(m, n) != 1:
            raise NotCoprime(f"gcd({m}, {n}) > 1")
        with self._lock:
            self.stats.record(k)
        return self._evaluate(m % n, n, k)

    def reset_stats(self):
        with self._lock:
            self.stats = OracleStats()

    def _evaluate(self, m, n, k):
        raise NotImplementedError


def crs_query(oracle, m, n, k):
    return oracle.crs_query(m, n, k)


class FactorOracle(CrsOracle):
    """Factorizes n (or looks it up in a supplied table) and evaluates the
    composite symbol via the Euler criterion.  Precondition violations are
    detected and raised, modeling the well-definedness clause."""

    def __init__(self, known=None, trusted_factorizations=False):
        super().__init__()
        self._cache = {}
        if known:
            for fact in known:
                if not trusted_factorizations:
                    _verify_factorization(fact)
                self._cache[fact.value] = fact

    def _factorization(self, n):
        fact = self._cache.get(n)
        if fact is None:
            fact = factorize(n)
            self._cache[n] = fact
        return fact

    def _evaluate(self, m, n, k):
        return symbol_composite(m, self._factorization(n), k)


def _verify_factorization(fact: Factorization):
    primes = fact.primes()
    if primes != sorted(set(primes)) or not all(is_prime(p) for p in primes):
        raise InvalidInput("factor list must be strictly increasing primes")
    if any(e < 1 for _, e in fact.factors):
        raise InvalidInput("exponents must be positive")


class DefinitionOracle(CrsOracle):
    """Evaluates every prime-level symbol by exhaustive solvability search.
    Exists purely as an independent cross-check of the Euler route."""

    def __init__(self):
        super().__init__()
        self._cache = {}

    def _evaluate(self, m, n, k):
        fact = self._cache.get(n)
        if fact is None:
            fact = factorize(n)
            self._cache[n] = fact
        result = 1
        for p, e in fact.factors:
            if e % 2 == 1:
                result *= symbol_prime_definition(m, p, k)
        return result


class ZolotarevOracle(CrsOracle):
    """Answers via restricted permutation signs; supports prime and
    distinct-odd-prime semiprime moduli up to the enumeration limit."""

    LIMIT = 10**5

    def __init__(self):
        super().__init__()
        self._cache = {}

    def _evaluate(self, m, n, k):
        if n > self.LIMIT:
            raise SearchSpaceTooLarge(f"n = {n} exceeds enumeration limit")
        fact = self._cache.get(n)
        if fact is None:
            fact = factorize(n)
            self._cache[n] = fact
        factors = fact.factors
        if len(factors) == 1 and factors[0][1] == 1:
            return zolotarev_prime(m, factors[0][0], k)
        if (
            len(factors) == 2
            and factors[0][1] == 1
            and factors[1][1] == 1
            and factors[0][0] != 2
        ):
            return zolotarev_semiprime(m, factors[0][0], factors[1][0], k)
        raise NotAdmissibleModulus(
            f"n = {n} is neither prime nor a distinct-odd-prime semiprime"
        )


def make_factor_oracle(trusted_factorizations=False, known=None):
    return FactorOracle(known=known, trusted_factorizations=trusted_factorizations)


def make_definition_oracle():
    return DefinitionOracle()


def make_zolotarev_oracle():
    return ZolotarevOracle()

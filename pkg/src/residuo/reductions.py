"""Oracle reductions: sum-of-two-squares solvability, 2-adic valuations and
low bits of semiprime factors, and quadratic residuosity, each phrased as a
handful of CRS(k) queries against an injected oracle.

Also the supporting utilities: the (ERH-conditional) least-nonresidue bound,
trial-division preprocessing, and the valuation relation between the factors
and the modulus.
"""

import math
import random
from dataclasses import dataclass

from .arithmetic import is_prime, jacobi, mod_inverse, valuation
from .errors import InvalidInput, NotCoprime, SearchExhausted
from .symbols import residue_set
from .zolotarev import _indexed_set, _restricted_sign

DEFAULT_FLOOR = 50
DEFAULT_TRIAL_CAP = 128


@dataclass(frozen=True)
class TwoSquaresVerdict:
    """Whether N = X^2 + Y^2 is solvable, with an optional witness pair in
    the solvable case or a certifying prime (= 3 mod 4 at odd exponent) in
    the unsolvable factorization path."""

    solvable: bool
    method: str
    certificate: int = None
    witness: tuple = None

    def to_json(self):
        return {
            "solvable": self.solvable,
            "method": self.method,
            "certificate": None if self.certificate is None else str(self.certificate),
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


@dataclass(frozen=True)
class ValuationResult:
    """Output of the valuation algorithm on N = pq: the two 2-adic
    valuations of p-1 and q-1 and both factors mod 2^m, m = v_large + 1."""

    v_small: int
    v_large: int
    m: int
    p_bits: int
    q_bits: int
    stats: object = None

    def to_json(self):
        return {
            "v_small": self.v_small,
            "v_large": self.v_large,
            "m": self.m,
            "p_bits": str(self.p_bits),
            "q_bits": str(self.q_bits),
            "oracle_stats": None if self.stats is None else self.stats.to_json(),
        }


@dataclass(frozen=True)
class QrpVerdict:
    is_residue: bool
    method: str

    def to_json(self):
        return {"is_residue": self.is_residue, "method": self.method}


@dataclass(frozen=True)
class ValuationRelation:
    """The valuations of p-1, q-1 and pq-1 at base b, classified by which
    clause of the valuation lemma applies."""

    v_p: int
    v_q: int
    v_N: int
    relation: str

    def to_json(self):
        return {
            "v_p": self.v_p,
            "v_q": self.v_q,
            "v_N": self.v_N,
            "relation": self.relation,
        }


def wedeniwski_bound(N):
    """ERH bound on the least quadratic nonresidue:
    1.5*(ln N)^2 - 8.8*ln N + 13, natural logarithm, double precision."""
    if N < 3:
        raise InvalidInput(f"N must be >= 3, got {N}")
    log_n = math.log(N)
    return 1.5 * log_n * log_n - 8.8 * log_n + 13


def candidate_prime_set(N, floor=DEFAULT_FLOOR):
    """All primes strictly below max(wedeniwski_bound(N), floor), ascending.

    The floor keeps the set usable at desk scale, where the literal bound
    dips below the least nonresidue; enlarging the set never breaks the
    forward direction of the criterion.
    """
    bound = max(wedeniwski_bound(N) if N >= 3 else 0.0, floor)
    limit = math.ceil(bound)
    return [p for p in range(2, limit) if p < bound and is_prime(p)]


def _two_squares_witness(N):
    # Smallest X with N - X^2 a perfect square; None if N too large to scan.
    if N > 10**12:
        return None
    x = 0
    while x * x * 2 <= N:
        y2 = N - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            return (x, y)
        x += 1
    return None


def two_squares_fermat(n_fact, find_witness=True):
    """Ground-truth verdict from the factorization: solvable iff every
    prime = 3 mod 4 occurs to an even power."""
    for p, e in n_fact.factors:
        if p % 4 == 3 and e % 2 == 1:
            return TwoSquaresVerdict(False, "fermat_factorization", certificate=p)
    witness = _two_squares_witness(n_fact.value) if find_witness else None
    return TwoSquaresVerdict(True, "fermat_factorization", witness=witness)


def two_squares_oracle(
    N,
    oracle,
    mode="deterministic",
    trials=DEFAULT_TRIAL_CAP,
    floor=DEFAULT_FLOOR,
    seed=None,
):
    """Decide solvability of N = X^2 + Y^2 with CRS queries only.

    Preprocessing trial-divides N by every candidate prime; a factor
    = 3 mod 4 found at odd multiplicity settles the question immediately.
    On the remaining cofactor the criterion (a|N')_2 = (a^2|N')_4 is tested
    for every candidate prime (deterministic) or for `trials` random units
    (probabilistic); any inequality certifies unsolvability.
    """
    if N < 1:
        raise InvalidInput(f"N must be >= 1, got {N}")
    if mode not in ("deterministic", "probabilistic"):
        raise InvalidInput(f"unknown mode {mode!r}")
    method = "oracle_" + mode
    candidates = candidate_prime_set(N, floor)
    rest = N
    for p in candidates:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if p % 4 == 3 and e % 2 == 1:
            return TwoSquaresVerdict(False, method, certificate=p)
    if rest == 1:
        return TwoSquaresVerdict(True, method)
    if mode == "deterministic":
        test_values = candidates
    else:
        rng = random.Random(seed)
        test_values = []
        while len(test_values) < trials:
            a = rng.randrange(1, rest) if rest > 2 else 1
            if math.gcd(a, rest) == 1:
                test_values.append(a)
    for a in test_values:
        if oracle.crs_query(a % rest, rest, 1) != oracle.crs_query(
            a * a % rest, rest, 2
        ):
            return TwoSquaresVerdict(False, method)
    return TwoSquaresVerdict(True, method)


def _search_candidates(N, search, trial_cap, seed):
    # Yields up to trial_cap candidates coprime to N.
    if search == "deterministic_enum":
        produced = 0
        a = 2
        while produced < trial_cap:
            if math.gcd(a, N) == 1:
                yield a
                produced += 1
            a += 1
    elif search == "seeded_random":
        rng = random.Random(seed)
        produced = 0
        while produced < trial_cap:
            a = rng.randrange(2, N - 1)
            if math.gcd(a, N) == 1:
                yield a
                produced += 1
    else:
        raise InvalidInput(f"unknown search strategy {search!r}")


def semiprime_valuations(
    N,
    oracle,
    search="deterministic_enum",
    trial_cap=DEFAULT_TRIAL_CAP,
    seed=None,
):
    """Compute {nu_2(p-1), nu_2(q-1)} for an odd semiprime N = pq with
    CRS queries only, then recover both factors mod 2^(v_large + 1).

    Step 1: v = nu_2(N-1).  Step 2: find a with (a|N)_2 = -1.  Step 3: scan
    s_i = (a^(2^(i-1))|N)_{2^i} for i = 1..v; the first +1 at position j
    means both valuations equal j-1.  Otherwise v_small = v and Steps 4/5
    locate v_large with a second witness b.
    """
    if N < 9 or N % 2 == 0:
        raise InvalidInput(f"N must be an odd semiprime, got {N}")
    start = oracle.stats.snapshot()
    v = valuation(N - 1, 2)
    for a in _search_candidates(N, search, trial_cap, seed):
        if jacobi(a, N) == -1:
            break
    else:
        raise SearchExhausted(
            f"no quadratic nonresidue found within {trial_cap} trials"
        )
    v_small = v_large = None
    for i in range(1, v + 1):
        if oracle.crs_query(pow(a, 1 << (i - 1), N), N, i) == 1:
            v_small = v_large = i - 1
            break
    if v_small is None:
        v_small = v
        for b in _search_candidates(N, search, trial_cap, seed):
            if oracle.crs_query(pow(b, 1 << v, N), N, v + 1) == -1:
                break
        else:
            raise SearchExhausted(
                f"no level-{v + 1} witness found within {trial_cap} trials"
            )
        i = v + 1
        cap = N.bit_length() + 2
        while True:
            i += 1
            if i > cap:
                raise SearchExhausted("valuation scan exceeded log N levels")
            if oracle.crs_query(pow(b, 1 << (i - 1), N), N, i) == 1:
                v_large = i - 1
                break
    p_bits, q_bits = recover_low_bits(N, v_small, v_large)
    return ValuationResult(
        v_small,
        v_large,
        v_large + 1,
        p_bits,
        q_bits,
        stats=oracle.stats.since(start),
    )


def recover_low_bits(N, v_small, v_large):
    """Low bits of the factors of odd N = pq from the two valuations:
    the factor with the larger valuation is 1 + 2^v_large mod 2^m for
    m = v_large + 1, and the other follows from N by inversion mod 2^m."""
    if N % 2 == 0:
        raise InvalidInput(f"N must be odd, got {N}")
    if v_small > v_large or v_small < 1:
        raise InvalidInput(
            f"need 1 <= v_small <= v_large, got {v_small}, {v_large}"
        )
    m = v_large + 1
    modulus = 1 << m
    q_bits = (1 + (1 << v_large)) % modulus
    if v_small == v_large:
        return q_bits, q_bits
    p_bits = N * mod_inverse(q_bits, modulus) % modulus
    return p_bits, q_bits


def qrp_decide(N, a, oracle):
    """Squareness of a mod N (semiprime with distinct factor valuations)
    by one CRS query at level nu_2(N-1) + 1."""
    _check_qrp_input(N, a)
    v = valuation(N - 1, 2)
    s = oracle.crs_query(pow(a, 1 << v, N), N, v + 1)
    return QrpVerdict(s == 1, "theorem_t4")


def qrp_decide_c2(N, a, oracle):
    """Squareness of a mod N for N = 3 mod 4 by one CRS query at level 2."""
    if N % 4 != 3:
        raise InvalidInput(f"N must be 3 mod 4, got {N}")
    _check_qrp_input(N, a)
    s = oracle.crs_query(a * a % N, N, 2)
    return QrpVerdict(s == 1, "corollary_c2")


def qrp_decide_permutation(N, a):
    """Squareness of a mod N (N = 3 mod 4) as the sign of multiplication by
    a^2 on the unit square subgroup mod N; no oracle involved."""
    if N % 4 != 3:
        raise InvalidInput(f"N must be 3 mod 4, got {N}")
    _check_qrp_input(N, a)
    members, pos = _indexed_set(N, 1, True)
    return QrpVerdict(
        _restricted_sign(a * a % N, N, members, pos) == 1, "corollary_c3"
    )


def qrp_bruteforce(N, a):
    """Exhaustive squareness test; the independent check for the suite."""
    squares = residue_set(N, 1, True)
    return QrpVerdict(a % N in set(squares.members), "bruteforce")


def _check_qrp_input(N, a):
    if N < 3 or N % 2 == 0:
        raise InvalidInput(f"N must be odd and >= 3, got {N}")
    if jacobi(a % N, N) != 1:
        raise InvalidInput(f"Jacobi symbol ({a}|{N}) must be +1")


def valuation_relation(b, p, q):
    """Valuations of p-1, q-1 and pq-1 at base b, classified: with
    v = min(v_p, v_q), relation is strict_equal_case when v_p != v_q
    (then v = v_N) and less_than_case when v_p = v_q (then v <= v_N)."""
    if p == q:
        raise InvalidInput("p and q must be distinct")
    v_p = valuation(p - 1, b)
    v_q = valuation(q - 1, b)
    v_n = valuation(p * q - 1, b)
    relation = "strict_equal_case" if v_p != v_q else "less_than_case"
    return ValuationRelation(v_p, v_q, v_n, relation)


def lemma_l4_check(N, a, oracle):
    """True iff (a|N)_2 = (a^2|N)_4; a necessary condition for N being a
    sum of two squares."""
    if math.gcd(a, N) != 1:
        raise NotCoprime(f"gcd({a}, {N}) > 1")
    return oracle.crs_query(a % N, N, 1) == oracle.crs_query(a * a % N, N, 2)

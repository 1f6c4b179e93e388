"""Permutation-sign characterizations of the 2^k-th power residue symbol.

The symbol at a prime equals the sign of multiplication-by-a restricted to
the level-(k-1) unit residue set; at a semiprime the restriction set is
chosen by a case split on N mod 2^k.  For moduli with three or more prime
factors the characterization fails, and a search for the smallest
counterexample is included.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .arithmetic import is_prime, jacobi
from .errors import (
    InvalidInput,
    NotAdmissibleModulus,
    NotAPermutation,
    NotClosedUnderAction,
    NotCoprime,
    PreconditionViolated,
)
from .symbols import (
    ResidueClassSet,
    residue_set,
    symbol_prime_definition,
)


@dataclass(frozen=True)
class PermutationTable:
    """A permutation of a listed residue set: position i maps
    domain[i] -> image[i]; domain is sorted ascending."""

    domain: tuple
    image: tuple

    def to_json(self):
        return {
            "domain": [str(x) for x in self.domain],
            "image": [str(x) for x in self.image],
        }


def permutation_sign(perm: PermutationTable):
    """+1 for even permutations, -1 for odd, via cycle decomposition:
    sign = (-1)^(|domain| - #cycles)."""
    domain, image = perm.domain, perm.image
    n = len(domain)
    if len(image) != n:
        raise NotAPermutation("domain and image differ in length")
    pos = {x: i for i, x in enumerate(domain)}
    try:
        nxt = [pos[y] for y in image]
    except KeyError as exc:
        raise NotAPermutation(f"image value {exc.args[0]} not in domain") from None
    return _cycle_sign(nxt)


def _cycle_sign(nxt):
    # nxt[i] is the position domain[i] maps to; raises if not a bijection.
    n = len(nxt)
    visited = bytearray(n)
    cycles = 0
    for i in range(n):
        if visited[i]:
            continue
        cycles += 1
        j = i
        while not visited[j]:
            visited[j] = 1
            j = nxt[j]
        if j != i:
            raise NotAPermutation("image repeats a value")
    return -1 if (n - cycles) & 1 else 1


def multiplication_permutation(a, n, rset: ResidueClassSet):
    """The table x -> a*x mod n over rset.members."""
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) > 1")
    members = rset.members
    mset = frozenset(members)
    image = []
    for x in members:
        y = a * x % n
        if y not in mset:
            raise NotClosedUnderAction(
                f"{a}*{x} = {y} mod {n} leaves the set (violated symbol precondition?)"
            )
        image.append(y)
    return PermutationTable(members, tuple(image))


@lru_cache(maxsize=4096)
def _indexed_set(n, k, units_only):
    members = residue_set(n, k, units_only).members
    return members, {x: i for i, x in enumerate(members)}


def _restricted_sign(a, n, members, pos):
    # Sign of x -> a*x mod n on an a-invariant set, one pass, no table object.
    try:
        nxt = [pos[a * x % n] for x in members]
    except KeyError:
        raise NotClosedUnderAction(
            f"multiplication by {a} leaves the set mod {n}"
        ) from None
    return _cycle_sign(nxt)


def zolotarev_prime(a, p, k):
    """(a|p)_{2^k} as the sign of multiplication-by-a restricted to the
    level-(k-1) unit residue set mod p."""
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if a % p == 0:
        raise NotCoprime(f"p = {p} divides a = {a}")
    if symbol_prime_definition(a, p, k - 1) != 1:
        raise PreconditionViolated(
            f"(a|{p}) at level 2^{k - 1} is -1", prime=p, level=k - 1
        )
    members, pos = _indexed_set(p, k - 1, True)
    return _restricted_sign(a % p, p, members, pos)


def zolotarev_semiprime(m, p, q, k):
    """(m|pq)_{2^k} as a restricted permutation sign: over the full
    level-(k-1) residue set when N = 1 mod 2^k, over the unit subgroup
    otherwise."""
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if p == q or p == 2 or q == 2 or not is_prime(p) or not is_prime(q):
        raise NotAdmissibleModulus(
            f"need distinct odd primes, got p = {p}, q = {q}"
        )
    n = p * q
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) > 1")
    for r in (p, q):
        if symbol_prime_definition(m, r, k - 1) != 1:
            raise PreconditionViolated(
                f"(m|{r}) at level 2^{k - 1} is -1", prime=r, level=k - 1
            )
    units_only = n % (1 << k) != 1
    members, pos = _indexed_set(n, k - 1, units_only)
    return _restricted_sign(m % n, n, members, pos)


def product_permutation_sign(signs, sizes):
    """Sign of a componentwise permutation of a cartesian product from the
    component signs: the product of signs[i]^(|X|/sizes[i])."""
    if len(signs) != len(sizes) or not signs:
        raise InvalidInput("signs and sizes must have equal positive length")
    if any(s not in (1, -1) for s in signs):
        raise InvalidInput("signs must be +1 or -1")
    if any(sz < 1 for sz in sizes):
        raise InvalidInput("sizes must be positive")
    total = math.prod(sizes)
    result = 1
    for s, sz in zip(signs, sizes):
        if s == -1 and (total // sz) % 2 == 1:
            result = -result
    return result


def find_tripleprime_counterexample(limit):
    """Smallest (n, m) in lexicographic order with n = pqr <= limit,
    p = 3 mod 4, q, r = 1 mod 4 distinct primes, m coprime to n with
    (m|p)_2 = (m|q)_2 = (m|r)_2 = +1 and (m|n)_4 = -1, yet both restricted
    permutation signs (unit subgroup and full square set) are +1.

    Returns None when no such pair exists up to the limit.
    """
    primes = [p for p in range(3, limit // 5 + 1) if is_prime(p)]
    p3 = [p for p in primes if p % 4 == 3]
    p1 = [p for p in primes if p % 4 == 1]
    moduli = sorted(
        (p * q * r, p, q, r)
        for p in p3
        for i, q in enumerate(p1)
        for r in p1[i + 1 :]
        if p * q * r <= limit
    )
    for n, p, q, r in moduli:
        for m in range(2, n):
            if math.gcd(m, n) != 1:
                continue
            if jacobi(m % p, p) != 1 or jacobi(m % q, q) != 1 or jacobi(m % r, r) != 1:
                continue
            sym = (
                symbol_prime_definition(m, p, 2)
                * symbol_prime_definition(m, q, 2)
                * symbol_prime_definition(m, r, 2)
            )
            if sym != -1:
                continue
            mem_u, pos_u = _indexed_set(n, 1, True)
            mem_f, pos_f = _indexed_set(n, 1, False)
            if (
                _restricted_sign(m, n, mem_u, pos_u) == 1
                and _restricted_sign(m, n, mem_f, pos_f) == 1
            ):
                return n, m
    return None

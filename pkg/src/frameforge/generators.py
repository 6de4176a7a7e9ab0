"""Generate (2k, k) equiangular frames from primes.

Two families of quasi-signature sets in (Z_p, +):

* p = 8m+5 with 2 a primitive root mod p: the even powers of 2 (the
  quadratic residues) form a quasi-signature set for a (p+1, (p+1)/2)
  frame; algorithm id "thm59".
* p = 8m+1 with <2> of index 2 in (Z_p, .): the powers of 2 themselves
  form one; algorithm id "thm511".

Either way the bordered matrix is a symmetric conference matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import cyclic
from .numbertheory import is_prime, multiplicative_order
from .signature_sets import verify_quasi_signature_set
from .subsets import Subset
from .verdicts import SignatureVerdict

__all__ = [
    "GeneratorHit",
    "order_of_two",
    "conference_sets_5mod8",
    "conference_sets_1mod8",
    "ALGORITHM_IDS",
    "generate",
    "table_rows",
]

ALGORITHM_5MOD8 = "thm59"
ALGORITHM_1MOD8 = "thm511"
ALGORITHM_IDS = (ALGORITHM_5MOD8, ALGORITHM_1MOD8)


@dataclass(frozen=True)
class GeneratorHit:
    m: int
    p: int
    n: int
    k: int
    residues: tuple[int, ...]
    algorithm: str


def order_of_two(p: int) -> int:
    """Multiplicative order of 2 mod p (p an odd prime)."""
    return multiplicative_order(2, p)


def _power_set(p: int, step: int) -> tuple[int, ...]:
    """Sorted residues {2^(step*r) mod p : 1 <= r <= (p-1)/2}."""
    base = pow(2, step, p)
    out = set()
    x = 1
    for _ in range((p - 1) // 2):
        x = x * base % p
        out.add(x)
    return tuple(sorted(out))


def conference_sets_5mod8(max_m: int, verify: bool = True) -> list[GeneratorHit]:
    """Hits for p = 8m + 5 prime with 2 a primitive root, m <= max_m."""
    hits = []
    for m in range(max_m + 1):
        p = 8 * m + 5
        if not is_prime(p) or order_of_two(p) != p - 1:
            continue
        hit = GeneratorHit(
            m=m, p=p, n=p + 1, k=(p + 1) // 2,
            residues=_power_set(p, 2), algorithm=ALGORITHM_5MOD8,
        )
        if verify:
            _reverify(hit)
        hits.append(hit)
    return hits


def conference_sets_1mod8(max_m: int, verify: bool = True) -> list[GeneratorHit]:
    """Hits for p = 8m + 1 prime with <2> of index 2 in (Z_p, .), m <= max_m."""
    hits = []
    for m in range(max_m + 1):
        p = 8 * m + 1
        if not is_prime(p) or order_of_two(p) != (p - 1) // 2:
            continue
        hit = GeneratorHit(
            m=m, p=p, n=p + 1, k=(p + 1) // 2,
            residues=_power_set(p, 1), algorithm=ALGORITHM_1MOD8,
        )
        if verify:
            _reverify(hit)
        hits.append(hit)
    return hits


def generate(algorithm: str, max_m: int, verify: bool = True) -> list[GeneratorHit]:
    """Dispatch by algorithm id ("thm59" or "thm511")."""
    if algorithm == ALGORITHM_5MOD8:
        return conference_sets_5mod8(max_m, verify=verify)
    if algorithm == ALGORITHM_1MOD8:
        return conference_sets_1mod8(max_m, verify=verify)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def _reverify(hit: GeneratorHit) -> SignatureVerdict:
    group = cyclic(hit.p)
    verdict = verify_quasi_signature_set(group, Subset.of(hit.p, hit.residues))
    if not isinstance(verdict, SignatureVerdict) or (
        verdict.params.n != hit.n or verdict.params.k != hit.k or verdict.mu != 0
    ):
        raise RuntimeError(f"internal: generated set for p={hit.p} failed re-verification")
    return verdict


def table_rows(hits: list[GeneratorHit]) -> list[tuple[int, int, int]]:
    """(m, n, k) triples in ascending m order."""
    return [(h.m, h.n, h.k) for h in hits]

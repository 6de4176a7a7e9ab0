"""Exhaustive enumeration of signature sets, quasi-signature sets and
cube-root (quasi-)pairs in small groups.

Candidates are generated over inverse-closure orbits, verified by the exact
criteria, and returned in a deterministic order independent of worker count.
Pruning never drops anything the verifiers would accept, so a naive scan of
all subset assignments produces the same hit set.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

from .cube_root import nmu_excluded, verify_quasi_signature_pair, verify_signature_pair
from .groups import GroupTable
from .signature_sets import verify_quasi_signature_set, verify_signature_set
from .subsets import Subset, conjugate_subset
from .verdicts import SignatureVerdict

__all__ = [
    "SearchSpec",
    "SearchHit",
    "KINDS",
    "enumerate_inverse_closed",
    "cube_candidates",
    "search",
]

KINDS = ("signature", "quasi", "cube-pair", "cube-quasi")

#: Default exhaustive-order ceilings per kind; override with force=True.
DEFAULT_ORDER_LIMITS = {
    "signature": 36,
    "quasi": 36,
    "cube-pair": 16,
    "cube-quasi": 16,
}


@dataclass(frozen=True)
class SearchSpec:
    group: GroupTable
    kind: str
    mu: int | None = None
    dedupe_conjugates: bool = False
    limit: int | None = None
    force: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")


@dataclass(frozen=True)
class SearchHit:
    verdict: SignatureVerdict
    canonical_key: tuple[tuple[str, ...], tuple[str, ...]]


def _orbits(group: GroupTable) -> tuple[list[int], list[tuple[int, int]]]:
    """Involutions, and the two-element inverse orbits {x, x^-1} with x < x^-1."""
    involutions = []
    paired = []
    for x in range(1, group.order):
        ix = int(group.inv[x])
        if ix == x:
            involutions.append(x)
        elif x < ix:
            paired.append((x, ix))
    return involutions, paired


def enumerate_inverse_closed(group: GroupTable) -> Iterator[Subset]:
    """All inverse-closed subsets of the non-identity elements.

    One bit per inverse orbit, ascending, so the order is deterministic.
    """
    involutions, paired = _orbits(group)
    orbit_bits = [1 << x for x in involutions] + [(1 << x) | (1 << y) for x, y in paired]
    for mask in range(1 << len(orbit_bits)):
        bits = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                bits |= orbit_bits[i]
            m >>= 1
            i += 1
        yield Subset(group.order, bits)


def cube_candidates(group: GroupTable) -> Iterator[tuple[Subset, Subset]]:
    """(S, T) candidates for cube kinds: involutions always in S, and each
    remaining inverse orbit is either in S or oriented into T one of two
    ways (its partner landing in V).  Everything skipped here fails the
    closure conditions S = S^-1, V = T^-1."""
    involutions, paired = _orbits(group)
    base = 0
    for x in involutions:
        base |= 1 << x
    k = len(paired)
    for code in range(3 ** k):
        s_bits, t_bits = base, 0
        c = code
        for x, y in paired:
            c, digit = divmod(c, 3)
            if digit == 0:
                s_bits |= (1 << x) | (1 << y)
            elif digit == 1:
                t_bits |= 1 << x
            else:
                t_bits |= 1 << y
        yield Subset(group.order, s_bits), Subset(group.order, t_bits)


def _canonical_key(
    group: GroupTable, s: Subset, t: Subset | None
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    t_labels = tuple(sorted(t.labels(group))) if t is not None else ()
    return tuple(sorted(s.labels(group))), t_labels


def search(spec: SearchSpec) -> list[SearchHit]:
    """Run the exhaustive (pruned) search described by the spec.

    Results are sorted by canonical key; an empty list is a valid outcome.
    """
    group = spec.group
    limit_order = DEFAULT_ORDER_LIMITS[spec.kind]
    if group.order > limit_order and not spec.force:
        raise ValueError(
            f"order {group.order} exceeds the default {spec.kind} bound "
            f"{limit_order}; pass force=True to override"
        )

    candidates: list
    verify: Callable
    if spec.kind in ("signature", "quasi"):
        if spec.kind == "signature" and group.order % 2:
            return []  # no signature set exists in an odd-order group
        if spec.kind == "quasi" and group.order % 2 == 0:
            return []  # frame size |G|+1 must be even
        candidates = list(enumerate_inverse_closed(group))
        if spec.kind == "quasi" and spec.mu is not None:
            # |S| - |T| = mu pins |S| = (|G| - 1 + mu) / 2
            twice = group.order - 1 + spec.mu
            if twice % 2:
                return []
            want = twice // 2
            candidates = [s for s in candidates if s.size == want]
        verify = (
            verify_signature_set if spec.kind == "signature" else verify_quasi_signature_set
        )
        tasks = [(s, None) for s in candidates]
    else:
        if (
            spec.kind == "cube-pair"
            and spec.mu is not None
            and nmu_excluded(group.order, spec.mu, group.is_abelian)
        ):
            return []
        tasks = list(cube_candidates(group))
        if spec.kind == "cube-quasi" and spec.mu is not None:
            tasks = [(s, t) for s, t in tasks if s.size - t.size == spec.mu]
        verify = (
            verify_signature_pair if spec.kind == "cube-pair" else verify_quasi_signature_pair
        )

    def run(chunk: list) -> list[SignatureVerdict]:
        out = []
        for s, t in chunk:
            verdict = verify(group, s) if t is None else verify(group, s, t)
            if isinstance(verdict, SignatureVerdict):
                if spec.mu is None or verdict.mu == spec.mu:
                    out.append(verdict)
        return out

    workers = max(1, spec.workers)
    if workers == 1 or len(tasks) < 4 * workers:
        verdicts = run(tasks)
    else:
        chunks = [tasks[i::workers] for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            verdicts = [v for part in pool.map(run, chunks) for v in part]

    hits = [
        SearchHit(v, _canonical_key(group, v.subset, v.t_subset)) for v in verdicts
    ]
    hits.sort(key=lambda h: h.canonical_key)
    if spec.dedupe_conjugates:
        hits = _dedupe_by_conjugation(group, hits)
    if spec.limit is not None:
        hits = hits[: spec.limit]
    return hits


def _dedupe_by_conjugation(group: GroupTable, hits: list[SearchHit]) -> list[SearchHit]:
    """Keep one representative per conjugation orbit (the minimal key)."""
    kept = []
    seen: set = set()
    for hit in hits:
        v = hit.verdict
        orbit = set()
        for t in range(group.order):
            cs = conjugate_subset(group, v.subset, t)
            ct = conjugate_subset(group, v.t_subset, t) if v.t_subset is not None else None
            orbit.add(_canonical_key(group, cs, ct))
        key = min(orbit)
        if key not in seen:
            seen.add(key)
            kept.append(hit)
    return kept

"""Finite groups as explicit Cayley tables with 0-based element indices.

The identity always sits at index 0, so the non-identity elements form the
contiguous range 1..n-1 and subset masks can ignore bit 0.  Constructor
outputs are validated: Latin-square rows/columns, identity and inverse
axioms always, associativity exhaustively up to order 512 and by a million
sampled triples above that.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .numbertheory import is_prime
from .subsets import Subset

#: Largest supported group order (dense tables, 64-bit safe matrix products).
MAX_ORDER = 4096

_ASSOC_EXHAUSTIVE_LIMIT = 512
_ASSOC_SAMPLES = 1_000_000


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its multiplication table.

    mul[a, b] is the index of the product a*b; inv[a] the index of a^-1.
    Instances are immutable and safe to share across threads.
    """

    name: str
    mul: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ValueError(f"{label!r} is not an element of {self.name}") from None

    def subset(self, labels: Iterable[str]) -> Subset:
        return Subset.from_labels(self, labels)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = int(self.mul[y, x])
            k += 1
        return k

    def involutions(self) -> Subset:
        """Non-identity elements equal to their own inverse."""
        idx = np.nonzero(self.inv == np.arange(self.order))[0]
        return Subset.of(self.order, (int(i) for i in idx if i != 0))

    def __repr__(self) -> str:
        return f"GroupTable({self.name}, order={self.order})"


def make_group(name: str, mul: np.ndarray, labels: Sequence[str]) -> GroupTable:
    """Validate a multiplication table and package it as a GroupTable."""
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    n = len(labels)
    if n == 0:
        raise ValueError("a group needs at least the identity element")
    if n > MAX_ORDER:
        raise ValueError(f"group order {n} exceeds the supported maximum {MAX_ORDER}")
    if mul.shape != (n, n):
        raise ValueError("multiplication table shape does not match label count")
    rng = np.arange(n, dtype=np.int32)
    if not np.array_equal(mul[0], rng) or not np.array_equal(mul[:, 0], rng):
        raise ValueError("index 0 is not a two-sided identity")
    _check_latin(mul)
    inv = _inverse_table(mul)
    _check_associative(mul)
    mul.setflags(write=False)
    inv.setflags(write=False)
    return GroupTable(name=name, mul=mul, inv=inv, labels=tuple(labels))


def _check_latin(mul: np.ndarray) -> None:
    n = mul.shape[0]
    rows = np.arange(n)[:, None]
    seen = np.zeros((n, n), dtype=bool)
    seen[rows, mul] = True
    if not seen.all():
        raise ValueError("rows of the multiplication table are not permutations")
    seen[:] = False
    seen[rows, mul.T] = True
    if not seen.all():
        raise ValueError("columns of the multiplication table are not permutations")


def _inverse_table(mul: np.ndarray) -> np.ndarray:
    n = mul.shape[0]
    inv = np.argmin(mul, axis=1).astype(np.int32)  # unique zero per row (Latin)
    if not (mul[np.arange(n), inv] == 0).all() or not (mul[inv, np.arange(n)] == 0).all():
        raise ValueError("inverses are not two-sided")
    return inv


def _check_associative(mul: np.ndarray) -> None:
    n = mul.shape[0]
    if n <= _ASSOC_EXHAUSTIVE_LIMIT:
        for a in range(n):
            if not np.array_equal(mul[mul[a], :], mul[a][mul]):
                raise ValueError(f"associativity fails for some triple starting at {a}")
        return
    rng = np.random.default_rng(0)
    a = rng.integers(0, n, _ASSOC_SAMPLES)
    b = rng.integers(0, n, _ASSOC_SAMPLES)
    c = rng.integers(0, n, _ASSOC_SAMPLES)
    if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
        raise ValueError("associativity fails on a sampled triple")


def cyclic(n: int) -> GroupTable:
    """The cyclic group (Z_n, +); element i is labelled by its residue."""
    if n < 1:
        raise ValueError("cyclic group order must be at least 1")
    i = np.arange(n, dtype=np.int64)
    mul = (i[:, None] + i[None, :]) % n
    return make_group(f"C{n}", mul, [str(k) for k in range(n)])


def direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """Componentwise product; element (i, j) lives at index i*|g2| + j."""
    n1, n2 = g1.order, g2.order
    if n1 * n2 > MAX_ORDER:
        raise ValueError(f"product order {n1 * n2} exceeds the supported maximum {MAX_ORDER}")
    packed = np.arange(n1 * n2)
    left, right = packed // n2, packed % n2
    mul = (g1.mul[np.ix_(left, left)].astype(np.int32) * n2
           + g2.mul[np.ix_(right, right)])
    labels = [f"({la},{lb})" for la in g1.labels for lb in g2.labels]
    return make_group(f"{g1.name}x{g2.name}", mul, labels)


def units_mod(p: int) -> GroupTable:
    """The multiplicative group (Z_p, .) for prime p; labels are residues."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    res = np.arange(1, p, dtype=np.int64)  # index i holds residue i+1
    mul = (res[:, None] * res[None, :]) % p - 1
    return make_group(f"Zmult{p}", mul, [str(r) for r in res])


_Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def quaternion8() -> GroupTable:
    """The quaternion group {1,-1,i,-i,j,-j,k,-k} with i*j = k, j*i = -k."""
    def enc(sign: int, axis: int) -> int:
        return axis * 2 + (0 if sign > 0 else 1)

    cyclic3 = {(1, 2): 3, (2, 3): 1, (3, 1): 2}
    mul = np.zeros((8, 8), dtype=np.int64)
    for e1 in range(8):
        s1, a1 = (1 if e1 % 2 == 0 else -1), e1 // 2
        for e2 in range(8):
            s2, a2 = (1 if e2 % 2 == 0 else -1), e2 // 2
            s = s1 * s2
            if a1 == 0:
                mul[e1, e2] = enc(s, a2)
            elif a2 == 0:
                mul[e1, e2] = enc(s, a1)
            elif a1 == a2:
                mul[e1, e2] = enc(-s, 0)
            elif (a1, a2) in cyclic3:
                mul[e1, e2] = enc(s, cyclic3[(a1, a2)])
            else:
                mul[e1, e2] = enc(-s, cyclic3[(a2, a1)])
    return make_group("Q8", mul, _Q8_LABELS)


def subgroup_generated(group: GroupTable, generators: Iterable[int]) -> Subset:
    """Closure of the generators under product and inverse (identity included)."""
    members = {0}
    frontier = [0]
    gens = [int(g) for g in generators]
    for g in gens:
        if not 0 <= g < group.order:
            raise ValueError(f"generator index {g} out of range")
    gens = gens + [int(group.inv[g]) for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = int(group.mul[x, g])
            if y not in members:
                members.add(y)
                frontier.append(y)
    return Subset.of(group.order, members)


_DESCRIPTOR_RES = (
    (re.compile(r"^C(\d+)xC(\d+)$"), lambda m: direct_product(cyclic(int(m[1])), cyclic(int(m[2])))),
    (re.compile(r"^C(\d+)$"), lambda m: cyclic(int(m[1]))),
    (re.compile(r"^Zmult(\d+)$"), lambda m: units_mod(int(m[1]))),
    (re.compile(r"^Q8$"), lambda m: quaternion8()),
)


def parse_group(descriptor: str) -> GroupTable:
    """Build a group from a descriptor string: C<n>, C<a>xC<b>, Zmult<p>, Q8."""
    for pattern, build in _DESCRIPTOR_RES:
        m = pattern.match(descriptor)
        if m:
            return build(m)
    raise ValueError(f"unrecognised group descriptor {descriptor!r}")

"""Shared oracles and small-group inventories for the test suite."""

from __future__ import annotations

import pytest

from frameforge import (
    GroupTable,
    Subset,
    cyclic,
    direct_product,
    quaternion8,
    units_mod,
)


def brute_count_pair(group: GroupTable, a: Subset, b: Subset, target: int) -> int:
    """Independent oracle: literal double loop over ordered pairs."""
    return sum(1 for x in a for y in b if int(group.mul[x, y]) == target)


def all_nonidentity_subsets(group: GroupTable):
    """Every subset of the non-identity elements (brute-force candidate set)."""
    n = group.order
    for mask in range(1 << (n - 1)):
        yield Subset(n, mask << 1)


def all_cube_assignments(group: GroupTable):
    """Every assignment of the non-identity elements to S / T / V."""
    n = group.order
    for code in range(3 ** (n - 1)):
        s_bits = t_bits = 0
        c = code
        for x in range(1, n):
            c, digit = divmod(c, 3)
            if digit == 0:
                s_bits |= 1 << x
            elif digit == 1:
                t_bits |= 1 << x
        yield Subset(n, s_bits), Subset(n, t_bits)


def small_groups_to_order_8() -> list[GroupTable]:
    groups = [cyclic(n) for n in range(2, 9)]
    groups.append(direct_product(cyclic(2), cyclic(2)))
    groups.append(direct_product(cyclic(2), cyclic(4)))
    groups.append(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))))
    groups.append(quaternion8())
    return groups


@pytest.fixture(scope="session")
def c4xc4() -> GroupTable:
    return direct_product(cyclic(4), cyclic(4))


@pytest.fixture(scope="session")
def c6xc6() -> GroupTable:
    return direct_product(cyclic(6), cyclic(6))


@pytest.fixture(scope="session")
def q8() -> GroupTable:
    return quaternion8()


@pytest.fixture(scope="session")
def z13_units() -> GroupTable:
    return units_mod(13)

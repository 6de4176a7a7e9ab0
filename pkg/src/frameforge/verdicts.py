"""Result types shared by the set/pair verifiers."""

from __future__ import annotations

from dataclasses import dataclass

from .params import FrameParams
from .subsets import Subset


@dataclass(frozen=True)
class Rejection:
    """A verification failure, with the failing clause and a witness."""

    reason: str
    detail: str = ""
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return False

    def __str__(self) -> str:
        parts = [self.reason]
        if self.detail:
            parts.append(self.detail)
        if self.witness is not None:
            parts.append(f"witness={self.witness}")
        return ": ".join(parts)


@dataclass(frozen=True)
class SignatureVerdict:
    """A successful verification of a set (or pair of sets) in a group.

    kind is one of "signature", "quasi", "cube-pair", "cube-quasi";
    matrix_dim is the size of the certified matrix (group order, plus one
    for the bordered kinds).
    """

    kind: str
    params: FrameParams
    mu: int
    subset: Subset
    t_subset: Subset | None
    matrix_dim: int

    @property
    def ok(self) -> bool:
        return True

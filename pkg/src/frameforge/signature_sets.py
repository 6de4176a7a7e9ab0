"""Verify signature sets and quasi-signature sets by exact pair counting.

A subset S of G\\{e} (with T the complementary non-identity elements) is a
signature set when the +-1 regular-representation sum is a two-eigenvalue
Seidel matrix; it is a quasi-signature set when the bordered (standard-form)
matrix is.  Both are decided here by the equivalent counting criteria, with
the two known equivalent forms checked against each other as a mutual
oracle; the matrix identity itself is exercised by the test suite and by
the certificate invariant of every verdict.
"""

from __future__ import annotations

import numpy as np

from .groups import GroupTable
from .matrices import SeidelMatrixInt, border_standard, regrep_sum
from .params import Infeasible, params_from_mu
from .subsets import (
    Subset,
    complement_nonidentity,
    inverse_set,
    pair_count_table,
)
from .verdicts import Rejection, SignatureVerdict

__all__ = [
    "complement_set",
    "signature_matrix",
    "quasi_signature_matrix",
    "verify_signature_set",
    "verify_quasi_signature_set",
    "index2_subgroup_set",
]


def complement_set(group: GroupTable, s: Subset) -> Subset:
    """T = S^c minus the identity."""
    if s.has_identity:
        raise ValueError("subset must not contain the identity")
    if s.order != group.order:
        raise ValueError("subset does not belong to this group")
    return complement_nonidentity(s)


def signature_matrix(group: GroupTable, s: Subset) -> SeidelMatrixInt:
    """The +-1 matrix with +1 on S and -1 on the complementary T."""
    coeffs = np.full(group.order, -1, dtype=np.int64)
    coeffs[0] = 0
    for x in s:
        coeffs[x] = 1
    return SeidelMatrixInt(regrep_sum(group, coeffs))


def quasi_signature_matrix(group: GroupTable, s: Subset) -> SeidelMatrixInt:
    """The bordered (standard-form) matrix of size |G| + 1."""
    return border_standard(signature_matrix(group, s))


def verify_signature_set(group: GroupTable, s: Subset) -> SignatureVerdict | Rejection:
    """Decide whether S is a signature set; n is the group order.

    Criteria: S and T closed under inverses, and one even mu with
    4*N_{(S,T)}^g = n-2-mu on S and 4*N_{(S,T)}^h = n-2+mu on T.
    Odd group order is rejected outright (no signature set exists there).
    """
    n = group.order
    bad = _common_screens(group, s)
    if bad is not None:
        return bad
    if n % 2:
        # covers the degenerate one-element group as well
        return Rejection("odd-order", f"group order {n} is odd")
    t = complement_nonidentity(s)
    closure = _closure_check(group, s, t)
    if closure is not None:
        return closure

    ct_st = pair_count_table(group, s, t)
    s_idx = s.indices_array()
    t_idx = t.indices_array()
    if s_idx.size:
        mu = n - 2 - 4 * int(ct_st[s_idx[0]])
    else:
        mu = -(n - 2)
    if mu % 2:
        return Rejection("odd-mu", f"candidate mu={mu} is odd")
    if not -(n - 2) <= mu <= n - 2:
        return Rejection("mu-out-of-range", f"mu={mu} outside [-(n-2), n-2]")
    if s_idx.size and not np.all(4 * ct_st[s_idx] == n - 2 - mu):
        g = int(s_idx[np.argmax(4 * ct_st[s_idx] != n - 2 - mu)])
        return Rejection(
            "count-mismatch-on-s",
            f"N_(S,T) at {group.labels[g]} is {int(ct_st[g])}, need (n-2-mu)/4",
            witness=group.labels[g],
        )
    if t_idx.size and not np.all(4 * ct_st[t_idx] == n - 2 + mu):
        h = int(t_idx[np.argmax(4 * ct_st[t_idx] != n - 2 + mu)])
        return Rejection(
            "count-mismatch-on-t",
            f"N_(S,T) at {group.labels[h]} is {int(ct_st[h])}, need (n-2+mu)/4",
            witness=group.labels[h],
        )
    _cross_check_triple_form(group, s, t, ct_st, mu, quasi=False)

    params = params_from_mu(n, mu)
    if isinstance(params, Infeasible):
        return Rejection("infeasible-parameters", f"mu={mu}: {params.reason}")
    return SignatureVerdict(
        kind="signature", params=params, mu=mu, subset=s, t_subset=None, matrix_dim=n
    )


def verify_quasi_signature_set(group: GroupTable, s: Subset) -> SignatureVerdict | Rejection:
    """Decide whether S is a quasi-signature set; the frame size is |G| + 1.

    mu is forced to |S| - |T|.  Criteria: S, T closed under inverses,
    4*N_{(S,S)}^g = n+3mu-6 on S and 4*N_{(T,T)}^h = n-3mu-6 on T, and mu
    within the admissible band 2 - n/3 <= mu <= n/3 - 2 (which excludes the
    trivial all-or-nothing subsets).
    """
    bad = _common_screens(group, s)
    if bad is not None:
        return bad
    n = group.order + 1
    if n % 2:
        return Rejection("odd-frame-size", f"|G|+1 = {n} is odd")
    t = complement_nonidentity(s)
    mu = s.size - t.size
    if not 6 - n <= 3 * mu <= n - 6:
        return Rejection("mu-out-of-range", f"mu={mu} outside [2-n/3, n/3-2]")
    closure = _closure_check(group, s, t)
    if closure is not None:
        return closure

    ct_ss = pair_count_table(group, s, s)
    ct_tt = pair_count_table(group, t, t)
    s_idx = s.indices_array()
    t_idx = t.indices_array()
    if s_idx.size and not np.all(4 * ct_ss[s_idx] == n + 3 * mu - 6):
        g = int(s_idx[np.argmax(4 * ct_ss[s_idx] != n + 3 * mu - 6)])
        return Rejection(
            "count-mismatch-on-s",
            f"N_(S,S) at {group.labels[g]} is {int(ct_ss[g])}, need (n+3mu-6)/4",
            witness=group.labels[g],
        )
    if t_idx.size and not np.all(4 * ct_tt[t_idx] == n - 3 * mu - 6):
        h = int(t_idx[np.argmax(4 * ct_tt[t_idx] != n - 3 * mu - 6)])
        return Rejection(
            "count-mismatch-on-t",
            f"N_(T,T) at {group.labels[h]} is {int(ct_tt[h])}, need (n-3mu-6)/4",
            witness=group.labels[h],
        )
    _cross_check_triple_form(group, s, t, None, mu, quasi=True, ct_ss=ct_ss, ct_tt=ct_tt)

    params = params_from_mu(n, mu)
    if isinstance(params, Infeasible):
        return Rejection("infeasible-parameters", f"mu={mu}: {params.reason}")
    return SignatureVerdict(
        kind="quasi", params=params, mu=mu, subset=s, t_subset=None, matrix_dim=n
    )


def index2_subgroup_set(group: GroupTable, h: Subset) -> SignatureVerdict | Rejection:
    """H\\{e} is a signature set exactly when H has index 2 (then k = 1)."""
    if not h.has_identity:
        raise ValueError("subgroup mask must contain the identity")
    members = h.indices_array()
    products = group.mul[np.ix_(members, members)]
    if not np.isin(products, members).all() or not np.isin(group.inv[members], members).all():
        raise ValueError("mask is not a subgroup")
    if 2 * h.size != group.order:
        return Rejection("index-not-two", f"|H|={h.size} in a group of order {group.order}")
    verdict = verify_signature_set(group, Subset(h.order, h.bits & ~1))
    if isinstance(verdict, Rejection) or verdict.mu != group.order - 2 or verdict.params.k != 1:
        raise RuntimeError("internal: index-2 subgroup failed to verify as the trivial set")
    return verdict


def _common_screens(group: GroupTable, s: Subset) -> Rejection | None:
    if s.order != group.order:
        return Rejection("wrong-group", "subset does not belong to this group")
    if s.has_identity:
        return Rejection("identity-in-set", "the identity cannot be a member")
    return None


def _closure_check(group: GroupTable, s: Subset, t: Subset) -> Rejection | None:
    for name, subset in (("s", s), ("t", t)):
        mismatch = inverse_set(group, subset).difference(subset)
        if mismatch:
            w = group.labels[next(iter(mismatch))]
            return Rejection(
                f"{name}-not-inverse-closed", f"{name.upper()} is not closed under inverses",
                witness=w,
            )
    return None


def _cross_check_triple_form(
    group: GroupTable,
    s: Subset,
    t: Subset,
    ct_st: np.ndarray | None,
    mu: int,
    quasi: bool,
    ct_ss: np.ndarray | None = None,
    ct_tt: np.ndarray | None = None,
) -> None:
    """The equivalent three-count criterion must agree with the accepted one.

    For signature sets: N_(S,S) - 2 N_(S,T) + N_(T,T) equals mu on S and
    -mu on T.  For quasi sets the targets shift to mu - 1 and -mu - 1.
    Disagreement would mean an implementation bug, hence the hard error.
    """
    if ct_ss is None:
        ct_ss = pair_count_table(group, s, s)
    if ct_tt is None:
        ct_tt = pair_count_table(group, t, t)
    if ct_st is None:
        ct_st = pair_count_table(group, s, t)
    combined = ct_ss - 2 * ct_st + ct_tt
    target_s, target_t = (mu - 1, -mu - 1) if quasi else (mu, -mu)
    s_idx = s.indices_array()
    t_idx = t.indices_array()
    ok = (not s_idx.size or np.all(combined[s_idx] == target_s)) and (
        not t_idx.size or np.all(combined[t_idx] == target_t)
    )
    if not ok:
        raise RuntimeError("internal: the two equivalent counting criteria disagree")

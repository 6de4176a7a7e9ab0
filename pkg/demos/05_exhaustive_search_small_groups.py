"""Exhaustive searches over small groups.

The search engine enumerates inverse-closure orbits (so only candidates
that can possibly verify are generated), verifies each with the exact
counting criteria, and returns hits in a deterministic sorted order.
"""

from frameforge import SearchSpec, cyclic, direct_product, quaternion8, search


def show(title, hits, limit=8):
    print(f"{title}: {len(hits)} hit(s)")
    for h in hits[:limit]:
        v = h.verdict
        t_part = f" T={list(h.canonical_key[1])}" if v.t_subset is not None else ""
        print(f"  S={list(h.canonical_key[0])}{t_part}  mu={v.mu}  ({v.params.n},{v.params.k})")
    if len(hits) > limit:
        print(f"  ... and {len(hits) - limit} more")
    print()


# All signature sets of C4 x C4; the axis set for the (16, 6) frame shows up
# along with its translates and the trivial families.
g16 = direct_product(cyclic(4), cyclic(4))
show("signature sets in C4xC4", search(SearchSpec(group=g16, kind="signature")))

# Quasi-signature sets of Z5: exactly the two halves {1,4} and {2,3}.
show("quasi-signature sets in C5", search(SearchSpec(group=cyclic(5), kind="quasi")))

# Cube-root pairs in Z3, including the two omega-weighted orientations.
show("cube-root pairs in C3", search(SearchSpec(group=cyclic(3), kind="cube-pair")))

# The quaternion group, deduplicated by conjugation.
q8 = quaternion8()
show(
    "cube-root quasi-pairs in Q8 (conjugation-deduped)",
    search(SearchSpec(group=q8, kind="cube-quasi", dedupe_conjugates=True)),
)

# Nonexistence, exhaustively confirmed: no cube-root pair with mu = -2
# exists in either group of order 9.
for g in (cyclic(9), direct_product(cyclic(3), cyclic(3))):
    hits = search(SearchSpec(group=g, kind="cube-pair", mu=-2))
    print(f"cube-root pairs with mu=-2 in {g.name}: {hits!r}")

# Order 2p classification: every hit is one of the trivial lines k = 1,
# k = n-1, or the conference line k = p.
for n in (6, 10, 14):
    ks = sorted({h.verdict.params.k for h in search(SearchSpec(group=cyclic(n), kind="signature"))})
    print(f"k values over C{n}: {ks}")

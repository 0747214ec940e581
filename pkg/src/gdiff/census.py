"""Canonical forms and exhaustive enumeration of small connected graphs.

The census iterates every edge subset of the complete graph, keeps the
connected ones, and deduplicates by canonical form, trading speed for
auditability. Feasible through n = 6 in seconds; n = 7 takes minutes and
is only run when asked for explicitly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

from .core import Graph, bits

CANONICAL_MAX = 8


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte encoding; equal forms iff isomorphic.

    Minimizes the upper-triangle adjacency code over all relabelings that
    respect the (degree, neighbor-degree multiset) profile; any isomorphism
    preserves the profile, so restricting to these relabelings keeps the
    form complete while skipping most of the n! search.
    """
    n = g.n
    if n > CANONICAL_MAX:
        raise ValueError(f"canonical form is a factorial search; order must be <= {CANONICAL_MAX}")
    if n <= 1:
        return bytes([n])
    adj = g.adj
    degree = [row.bit_count() for row in adj]
    profile = {
        v: (degree[v], tuple(sorted((degree[u] for u in bits(adj[v])), reverse=True)))
        for v in range(n)
    }
    ordered = sorted(range(n), key=lambda v: profile[v], reverse=True)
    blocks: list[list[int]] = []
    for v in ordered:
        if blocks and profile[blocks[-1][-1]] == profile[v]:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for parts in product(*(permutations(block) for block in blocks)):
        p = [v for part in parts for v in part]
        code = 0
        for i, j in pairs:
            code = code << 1 | (adj[p[i]] >> p[j] & 1)
        if best is None or code < best:
            best = code
    nbits = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((nbits + 7) // 8, "big")


def _connected(rows: list[int], n: int) -> bool:
    if n == 0:
        return False
    comp = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= rows[v]
        frontier = grow & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def enumerate_connected(n: int, dedup: bool = True):
    """Yield connected graphs of order n, one per isomorphism class if dedup.

    Iterates all edge masks in ascending order, so representatives are the
    first labeled occurrence of each class and the stream is deterministic.
    """
    if not 1 <= n <= 7:
        raise ValueError("census enumeration supports 1 <= n <= 7")
    pairs = list(combinations(range(n), 2))
    seen: set[bytes] = set()
    for emask in range(1 << len(pairs)):
        rows = [0] * n
        mm = emask
        while mm:
            low = mm & -mm
            a, b = pairs[low.bit_length() - 1]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
            mm ^= low
        if not _connected(rows, n):
            continue
        g = Graph(n, tuple(rows))
        if dedup:
            form = canonical_form(g)
            if form in seen:
                continue
            seen.add(form)
        yield g


@lru_cache(maxsize=None)
def connected_census(n: int) -> tuple[Graph, ...]:
    """Deduplicated connected census of order n, cached per process."""
    return tuple(enumerate_connected(n, dedup=True))

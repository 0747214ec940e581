"""Exact solvers for the differential and its companion invariants.

Every solver is an exhaustive search, made practical by one cardinality
bound each; no heuristics, no approximation. For a graph of order n and a
candidate set S of size k:

* differential search: |B(S)| <= n - k, so the differential of S is at
  most n - 2k and cardinalities with n - 2k below the incumbent can be
  abandoned;
* enclaveless search: |B(S)| <= n - k directly;
* domination / vertex cover: scan cardinalities upward, so the first hit
  is optimal;
* independence: branch on a highest-degree vertex with memoization;
* Roman domination: direct scan of all 3^n labelings, deliberately
  independent of the differential solver so the two can cross-check.

Ties among witnesses are broken toward the lexicographically smallest
member tuple among minimum-cardinality optima, which keeps reports
reproducible. Searches that would exceed their node budget raise
BudgetExceededError rather than returning a partial answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .core import BudgetExceededError, CAPACITY, Graph, VertexSet, bits, mask_of
from .roperator import RGraph, build_r

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class DifferentialResult:
    """Outcome of an exact differential search.

    ``all_sets``, ``min_card`` and ``max_card`` are filled only when
    enumeration of every maximizer was requested. ``search_space_size``
    counts candidate sets examined, for instrumentation.
    """

    value: int
    witness: VertexSet
    search_space_size: int
    all_sets: tuple[VertexSet, ...] | None = None
    min_card: int | None = None
    max_card: int | None = None


class _NodeCounter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int):
        self.nodes = 0
        self.budget = budget

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"search exceeded its node budget of {self.budget}"
            )


def differential_exact(
    g: Graph,
    restrict: VertexSet | Iterable[int] | None = None,
    enumerate_all: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> DifferentialResult:
    """Maximize |B(S)| - |S| over subsets S of ``restrict`` (default: all of V).

    The boundary is always taken in ``g`` itself, so with ``restrict`` this
    computes the maximum over a restricted search space of the same
    objective. With ``enumerate_all`` every maximizer in the search space is
    collected.
    """
    if g.n == 0:
        raise ValueError("differential is undefined on the empty graph")
    if restrict is None:
        universe: tuple[int, ...] = tuple(range(g.n))
    else:
        universe = tuple(bits(g._coerce(restrict)))
    adj = g.adj
    ambient = g.n
    counter = _NodeCounter(budget)

    best = None
    best_combo: tuple[int, ...] = ()
    for k in range(len(universe) + 1):
        if best is not None and ambient - 2 * k <= best:
            break
        for combo in combinations(universe, k):
            counter.spend()
            smask = mask_of(combo)
            b = 0
            for v in combo:
                b |= adj[v]
            d = (b & ~smask).bit_count() - k
            if best is None or d > best:
                best, best_combo = d, combo
    assert best is not None

    witness = VertexSet(ambient, mask_of(best_combo))
    if not enumerate_all:
        return DifferentialResult(best, witness, counter.nodes)

    maximizers: list[VertexSet] = []
    for k in range(len(universe) + 1):
        if ambient - 2 * k < best:
            break
        for combo in combinations(universe, k):
            counter.spend()
            smask = mask_of(combo)
            b = 0
            for v in combo:
                b |= adj[v]
            if (b & ~smask).bit_count() - k == best:
                maximizers.append(VertexSet(ambient, smask))
    return DifferentialResult(
        best,
        witness,
        counter.nodes,
        all_sets=tuple(maximizers),
        min_card=len(maximizers[0]),
        max_card=len(maximizers[-1]),
    )


def differential_of_r(
    rg: RGraph,
    mode: str = "v_restricted",
    enumerate_all: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> DifferentialResult:
    """Differential of the R-graph.

    ``v_restricted`` searches only subsets of the original vertex part (a
    2^n search instead of 2^(n+m)); it requires a connected base of order
    at least 3. ``full`` scans every subset of the R-graph and exists to
    test that the restriction loses nothing.
    """
    if mode == "full":
        return differential_exact(rg.total, enumerate_all=enumerate_all, budget=budget)
    if mode != "v_restricted":
        raise ValueError(f"unknown mode {mode!r}")
    if rg.base.n < 3 or not rg.base.is_connected:
        raise ValueError(
            "v_restricted search requires a connected base of order >= 3"
        )
    return differential_exact(
        rg.total, restrict=rg.v_part, enumerate_all=enumerate_all, budget=budget
    )


def is_dominating(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    """True iff every vertex is in S or adjacent to a member of S."""
    smask = g._coerce(s)
    covered = 0
    for v in bits(smask):
        covered |= g.closed_adj[v]
    return covered == g.full_mask


def is_vertex_cover(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    """True iff every edge has at least one end in S."""
    smask = g._coerce(s)
    outside = g.full_mask & ~smask
    return all(not g.adj[v] & outside for v in bits(outside))


def domination_number(
    g: Graph, enumerate_min: bool = False, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexSet, tuple[VertexSet, ...] | None]:
    """Minimum dominating set size, one witness, optionally all minima."""
    if g.n == 0:
        raise ValueError("domination is undefined on the empty graph")
    cadj = g.closed_adj
    full = g.full_mask
    counter = _NodeCounter(budget)
    for k in range(1, g.n + 1):
        found: list[VertexSet] = []
        for combo in combinations(range(g.n), k):
            counter.spend()
            covered = 0
            for v in combo:
                covered |= cadj[v]
            if covered == full:
                witness = VertexSet(g.n, mask_of(combo))
                if not enumerate_min:
                    return k, witness, None
                found.append(witness)
        if found:
            return k, found[0], tuple(found)
    raise AssertionError("unreachable: V itself dominates")


def vertex_cover_number(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexSet]:
    """Minimum vertex cover size and one witness."""
    edges = g.edges()
    if not edges:
        return 0, VertexSet(g.n)
    counter = _NodeCounter(budget)
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            counter.spend()
            smask = mask_of(combo)
            if all(smask >> a & 1 or smask >> b & 1 for a, b in edges):
                return k, VertexSet(g.n, smask)
    raise AssertionError("unreachable: V itself covers")


def independence_number(g: Graph) -> tuple[int, VertexSet]:
    """Maximum independent set size and its lexicographically smallest witness."""
    adj = g.adj
    memo: dict[int, int] = {}

    def size(candidates: int) -> int:
        if candidates == 0:
            return 0
        cached = memo.get(candidates)
        if cached is not None:
            return cached
        pivot = -1
        pivot_deg = -1
        for v in bits(candidates):
            d = (adj[v] & candidates).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = v, d
        if pivot_deg == 0:
            result = candidates.bit_count()
        else:
            with_pivot = 1 + size(candidates & ~(adj[pivot] | 1 << pivot))
            without_pivot = size(candidates & ~(1 << pivot))
            result = max(with_pivot, without_pivot)
        memo[candidates] = result
        return result

    alpha = size(g.full_mask)
    # Rebuild the lexicographically smallest maximum set greedily.
    chosen = 0
    candidates = g.full_mask
    for v in range(g.n):
        if not candidates >> v & 1:
            continue
        rest = candidates & ~(adj[v] | 1 << v)
        if chosen.bit_count() + 1 + size(rest) == alpha:
            chosen |= 1 << v
            candidates = rest
        else:
            candidates &= ~(1 << v)
    return alpha, VertexSet(g.n, chosen)


def roman_domination_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum weight of a Roman dominating function, by direct labeling scan.

    A labeling V -> {0, 1, 2} is valid when every 0-labeled vertex has a
    2-labeled neighbor; the weight is the label sum. The scan covers all
    3^n labelings and is capped at n <= 12.
    """
    if g.n == 0:
        raise ValueError("Roman domination is undefined on the empty graph")
    if g.n > 12:
        raise ValueError("labeling search is capped at order 12")
    adj = g.adj
    best: int | None = None
    best_labels: tuple[int, ...] = ()
    for labels in product((0, 1, 2), repeat=g.n):
        weight = sum(labels)
        if best is not None and weight >= best:
            continue
        two_mask = 0
        for v, lab in enumerate(labels):
            if lab == 2:
                two_mask |= 1 << v
        if all(lab != 0 or adj[v] & two_mask for v, lab in enumerate(labels)):
            best, best_labels = weight, labels
    assert best is not None
    return best, best_labels


def enclaveless_number(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexSet]:
    """Maximum of |B(S)| over all subsets S, with witness."""
    counter = _NodeCounter(budget)
    best = -1
    best_combo: tuple[int, ...] = ()
    for k in range(g.n + 1):
        if g.n - k <= best:
            break
        for combo in combinations(range(g.n), k):
            counter.spend()
            smask = mask_of(combo)
            b = 0
            for v in combo:
                b |= g.adj[v]
            val = (b & ~smask).bit_count()
            if val > best:
                best, best_combo = val, combo
    return best, VertexSet(g.n, mask_of(best_combo))


def lambda_invariant(g: Graph) -> int:
    """m - n + 2 * (independence number)."""
    alpha, _ = independence_number(g)
    return g.m - g.n + 2 * alpha


def mu_invariant(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexSet]:
    """Largest cardinality of a differential set of R(g) inside the V part.

    Returned witness lives in the base graph's ambient order. Requires a
    connected base of order at least 3.
    """
    rg = build_r(g)
    result = differential_of_r(rg, "v_restricted", enumerate_all=True, budget=budget)
    assert result.all_sets is not None and result.max_card is not None
    top = next(s for s in result.all_sets if len(s) == result.max_card)
    return result.max_card, VertexSet(g.n, top.mask)


@dataclass(frozen=True)
class InvariantRecord:
    """Every invariant of one graph; fields are None when skipped.

    ``skipped`` maps each skipped field name to the reason it was not
    computed, so a record is always total.
    """

    n: int
    m: int
    delta_min: int | None
    delta_max: int | None
    diff: int | None
    diff_r: int | None
    gamma: int | None
    tau: int | None
    alpha: int | None
    roman: int | None
    psi: int | None
    lam: int | None
    mu: int | None
    skipped: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "delta_min": self.delta_min,
            "delta_max": self.delta_max,
            "diff": self.diff,
            "diff_r": self.diff_r,
            "gamma": self.gamma,
            "tau": self.tau,
            "alpha": self.alpha,
            "roman": self.roman,
            "psi": self.psi,
            "lambda": self.lam,
            "mu": self.mu,
            "skipped": dict(sorted(self.skipped.items())),
        }
        return out


def full_record(g: Graph, budget: int = DEFAULT_BUDGET) -> InvariantRecord:
    """Compute every invariant of ``g``, marking infeasible ones as skipped."""
    skipped: dict[str, str] = {}
    stats = g.degree_stats()

    def run(name, fn):
        try:
            return fn()
        except (ValueError, BudgetExceededError) as exc:
            skipped[name] = str(exc)
            return None

    diff = run("diff", lambda: differential_exact(g, budget=budget).value)
    gamma = run("gamma", lambda: domination_number(g, budget=budget)[0])
    tau = run("tau", lambda: vertex_cover_number(g, budget=budget)[0])
    alpha = run("alpha", lambda: independence_number(g)[0])
    roman = run("roman", lambda: roman_domination_number(g)[0])
    psi = run("psi", lambda: enclaveless_number(g, budget=budget)[0])
    lam = g.m - g.n + 2 * alpha if alpha is not None else None
    if lam is None:
        skipped["lambda"] = skipped.get("alpha", "independence number unavailable")

    if g.n < 3:
        reason = "R-graph invariants require order >= 3"
    elif not g.is_connected:
        reason = "R-graph invariants require a connected graph"
    elif g.n + g.m > CAPACITY:
        reason = f"R-graph order {g.n + g.m} exceeds capacity {CAPACITY}"
    else:
        reason = None
    if reason is None:
        rg = build_r(g)
        diff_r = run(
            "diff_r", lambda: differential_of_r(rg, budget=budget).value
        )
        mu = run("mu", lambda: mu_invariant(g, budget=budget)[0])
    else:
        diff_r = mu = None
        skipped["diff_r"] = reason
        skipped["mu"] = reason

    return InvariantRecord(
        n=g.n,
        m=g.m,
        delta_min=stats.minimum,
        delta_max=stats.maximum,
        diff=diff,
        diff_r=diff_r,
        gamma=gamma,
        tau=tau,
        alpha=alpha,
        roman=roman,
        psi=psi,
        lam=lam,
        mu=mu,
        skipped=skipped,
    )

"""Minimal rst-cutsets, target edge connectivity and the dense-graph cutset bounds.

An rst-cutset is an edge set whose removal leaves r, s, t not all in one
component.  A minimal one is exactly the edge boundary of a vertex set Q of
the target component such that both Q and its complement induce connected
subgraphs and each side holds at least one target.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms.connectivity import local_edge_connectivity

from . import _sweep
from .graph import BudgetExceeded, Edge, LabeledGraph, degrees

MAX_SWEEP_EDGES = 24


@dataclass(frozen=True)
class Cutset:
    """A minimal cutset with the component structure it leaves behind.

    ``side`` is the target component chosen for the annotation (the smaller
    one, ties broken by lowest target index); ``k = |side| - 1``.  ``kprime``
    is the size of a third target component and is 0 whenever removal leaves
    only two, which is always the case for minimal cutsets.
    """

    edges: tuple[Edge, ...]
    side: frozenset[int]
    k: int
    kprime: int
    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {"size": self.size, "edges": [list(e) for e in self.edges], "k": self.k, "kprime": self.kprime}


@dataclass
class CutsetProfile:
    lambda_: int
    counts_by_size: dict[int, int]
    cutsets: list[Cutset] = field(default_factory=list)
    max_size: int | None = None

    @property
    def witnesses(self) -> dict[int, Cutset]:
        out = {}
        for c in self.cutsets:
            out.setdefault(c.size, c)
        return dict(sorted(out.items()))

    def sizes(self) -> list[int]:
        return sorted(self.counts_by_size)

    def to_dict(self) -> dict:
        return {
            "lambda": self.lambda_,
            "counts": {str(k): v for k, v in sorted(self.counts_by_size.items())},
            "witnesses": [c.to_dict() for c in self.witnesses.values()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _components(n: int, edges) -> list[int]:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    left = (1 << n) - 1
    comps = []
    while left:
        comp = left & -left
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        left &= ~comp
    return comps


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _mask_set(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


def annotate(G: LabeledGraph, cut) -> Cutset:
    cut = tuple(sorted(cut))
    removed = set(cut)
    comps = _components(G.n, [e for e in G.edges if e not in removed])
    with_targets = [c for c in comps if c & 0b111]
    if len(with_targets) < 2:
        raise ValueError(f"{cut} does not separate the targets")
    # smallest target component, ties to the one holding the lowest target
    ordered = sorted(with_targets, key=lambda c: (c.bit_count(), (c & 0b111 & -(c & 0b111))))
    side = ordered[0]
    kprime = 0
    if len(with_targets) == 3:
        rest = [c for c in with_targets if c != side]
        rest.sort(key=lambda c: (c & 0b111 & -(c & 0b111)))
        kprime = rest[0].bit_count()
    others = sum(c.bit_count() for c in comps if not c & 0b111)
    parts = tuple(c.bit_count() for c in ordered) + (others,)
    return Cutset(cut, _mask_set(side), side.bit_count() - 1, kprime, parts)


def _induced_connected(adj: list[int], S: int) -> bool:
    if not S:
        return False
    seen = S & -S
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v] & S
        frontier = nxt & ~seen
        seen |= nxt
    return seen == S


def _require_connected_targets(G: LabeledGraph) -> None:
    if not G.targets_connected():
        raise ValueError("targets are already disconnected")


def lambda_rst(G: LabeledGraph) -> int:
    """Smallest rst-cutset size, as the least of the three pairwise max-flow values."""
    _require_connected_targets(G)
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return min(local_edge_connectivity(H, a, b) for a, b in ((0, 1), (0, 2), (1, 2)))


def _partition_cutsets(G: LabeledGraph, max_size: int | None) -> list[tuple[Edge, ...]]:
    adj = G.adjacency_masks()
    comp = next(c for c in _components(G.n, G.edges) if c & 1)
    members = list(_bits(comp & ~1))
    found = []
    for pick in range(1 << len(members)):
        Q = 1
        for j, v in enumerate(members):
            if pick >> j & 1:
                Q |= 1 << v
        if Q & 0b111 == 0b111:
            continue
        R = comp & ~Q
        if not (_induced_connected(adj, Q) and _induced_connected(adj, R)):
            continue
        cut = tuple(e for e in G.edges if (Q >> e[0] & 1) != (Q >> e[1] & 1))
        if max_size is None or len(cut) <= max_size:
            found.append(cut)
    return found


def _sweep_cutsets(G: LabeledGraph, max_size: int | None) -> list[tuple[Edge, ...]]:
    m = G.m
    if m > MAX_SWEEP_EDGES:
        raise BudgetExceeded(f"cutset sweep limited to m <= {MAX_SWEEP_EDGES}, got m={m}")
    table = _sweep.connectivity_table(G.edges, G.n)
    full = (1 << m) - 1
    found = []
    for masks in _sweep.iter_all_masks(m):
        keep = full ^ masks
        ok = ~table[keep]
        for k in range(m):
            has = ((masks >> k) & 1).astype(bool)
            ok &= ~has | table[keep | (1 << k)]
        if max_size is not None:
            ok &= _sweep.popcount(masks) <= max_size
        for mask in masks[ok]:
            mask = int(mask)
            found.append(tuple(G.edges[k] for k in range(m) if mask >> k & 1))
    return found


def enumerate_minimal_cutsets(G: LabeledGraph, max_size: int | None = None, method: str = "partition") -> CutsetProfile:
    """Every minimal rst-cutset of size at most ``max_size`` (all of them when None).

    ``method="partition"`` walks vertex bipartitions of the target component;
    ``method="sweep"`` checks every edge subset directly and is kept as the
    reference for small graphs.
    """
    _require_connected_targets(G)
    if method == "partition":
        raw = _partition_cutsets(G, max_size)
    elif method == "sweep":
        raw = _sweep_cutsets(G, max_size)
    else:
        raise ValueError(f"unknown method {method!r}")
    cuts = sorted((annotate(G, c) for c in raw), key=lambda c: (c.size, c.edges))
    counts: dict[int, int] = {}
    for c in cuts:
        counts[c.size] = counts.get(c.size, 0) + 1
    lam = min(counts) if counts else 0
    return CutsetProfile(lam, dict(sorted(counts.items())), cuts, max_size)


def _check_dense_range(G: LabeledGraph) -> int:
    n, l = G.n, G.num_deleted
    if n < 7 or not 2 <= l <= (n - 3) // 2:
        raise ValueError(f"needs n >= 7 and 2 <= l <= (n-3)//2 deleted edges, got n={n}, l={l}")
    return l


def cutset_bounds(n: int, l: int, k: int, kprime: int) -> tuple[int, int]:
    lower = n - 1 - l + k * (n - k - 2)
    upper = n - 1 + k * (n - k - 2) + kprime * (n - k - kprime - 1)
    return lower, upper


def lemma33_bounds_check(G: LabeledGraph, profile: CutsetProfile, lower_offset: int = 0) -> bool:
    """Whether every cutset in ``profile`` lies within the size bounds for its (k, k').

    ``lower_offset`` shifts the lower bound; it exists so a test can confirm
    that a deliberately tightened bound is violated.
    """
    l = _check_dense_range(G)
    for c in profile.cutsets:
        lo, hi = cutset_bounds(G.n, l, c.k, c.kprime)
        if not lo + lower_offset <= c.size <= hi:
            return False
    return True


@dataclass
class StructureReport:
    n: int
    spectrum: dict[int, int]
    smallest_size: int
    smallest_isolate_one_target: bool
    smallest_count: int
    next_size: int | None
    next_isolate_target_plus_one: bool
    next_sizes_match_degree: bool

    @property
    def passed(self) -> bool:
        return self.smallest_isolate_one_target and self.next_isolate_target_plus_one and self.next_sizes_match_degree


def lemma34_structure_check(G: LabeledGraph, profile: CutsetProfile, strict: bool = True) -> StructureReport:
    """Shape of the smallest and next-smallest minimal cutsets.

    The smallest should be target stars (one target alone); the next size up
    should cut off a target together with one non-target ``v``, with size
    ``n - 3 + deg(v)``.  The observed size spectrum is reported as well.
    With ``strict=False`` graphs outside the dense range are reported on
    instead of rejected.
    """
    if strict:
        _check_dense_range(G)
    sizes = profile.sizes()
    if not sizes:
        raise ValueError("empty cutset profile")
    deg = degrees(G)
    first = [c for c in profile.cutsets if c.size == sizes[0]]
    iso_one = all(c.k == 0 and len(c.side & {0, 1, 2}) == 1 for c in first)
    nxt_size = sizes[1] if len(sizes) > 1 else None
    second = [c for c in profile.cutsets if c.size == nxt_size]
    pair_ok = bool(second) and all(c.k == 1 and len(c.side & {0, 1, 2}) == 1 for c in second)
    deg_ok = pair_ok and all(c.size == G.n - 3 + deg[min(c.side - {0, 1, 2})] for c in second)
    return StructureReport(G.n, dict(profile.counts_by_size), sizes[0], iso_one, len(first), nxt_size, pair_ok, deg_ok)


def near_one_count_identity(G: LabeledGraph, profile: CutsetProfile, NV) -> bool:
    """``N_{m-lambda} = C(m, lambda) - #(cutsets of size lambda)``."""
    lam = profile.lambda_
    return NV[G.m - lam] == math.comb(G.m, lam) - profile.counts_by_size.get(lam, 0)

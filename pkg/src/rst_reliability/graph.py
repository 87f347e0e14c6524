"""Three-terminal graphs, target-aware canonical forms and enumeration of G(n, m).

Vertices are integers ``0..n-1``; the targets r, s, t are always ``0, 1, 2``.
Graph classes are taken up to the permutations that map the target set onto
itself (targets may be permuted among themselves, non-targets freely).
"""

from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

TARGETS = (0, 1, 2)
MAX_CANON_VERTICES = 10
DEFAULT_BUDGET = 10**6

Edge = tuple[int, int]
CanonicalKey = bytes


class BudgetExceeded(RuntimeError):
    """An exhaustive sweep would exceed its configured size limit."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph with targets at vertices 0, 1, 2.

    ``edges`` is normalised to a strictly sorted tuple of ``(u, v)`` pairs
    with ``u < v``; equality of graphs is equality of edge lists.
    """

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = self.num_vertices
        if not isinstance(n, (int, np.integer)) or n < 3:
            raise ValueError(f"need at least 3 vertices (the targets), got {n!r}")
        normed = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            normed.append(_norm_edge(u, v))
        normed.sort()
        for a, b in zip(normed, normed[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a[0]}-{a[1]}")
        object.__setattr__(self, "num_vertices", int(n))
        object.__setattr__(self, "edges", tuple(normed))

    @property
    def n(self) -> int:
        return self.num_vertices

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_deleted(self) -> int:
        """Number of edges of K_n missing from the graph."""
        return math.comb(self.n, 2) - self.m

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edge_set()

    def deleted_edges(self) -> tuple[Edge, ...]:
        present = self.edge_set()
        return tuple(e for e in itertools.combinations(range(self.n), 2) if e not in present)

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def targets_connected(self) -> bool:
        adj = self.adjacency_masks()
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen & 0b111 == 0b111

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return LabeledGraph(self.n, tuple(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self):
        if self.num_deleted <= self.m:
            body = "deleted=" + ",".join(f"{u}-{v}" for u, v in self.deleted_edges())
        else:
            body = "edges=" + ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"LabeledGraph(n={self.n}; {body})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_complete_minus(n: int, deleted: Iterable[Sequence[int]] = ()) -> LabeledGraph:
    """K_n with the given vertex pairs removed."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    removed = set()
    for pair in deleted:
        u, v = (int(x) for x in pair)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"invalid vertex pair {u}-{v} for n={n}")
        e = _norm_edge(u, v)
        if e in removed:
            raise ValueError(f"pair {u}-{v} deleted twice")
        removed.add(e)
    return LabeledGraph(n, tuple(e for e in itertools.combinations(range(n), 2) if e not in removed))


def complete_graph(n: int) -> LabeledGraph:
    return from_complete_minus(n, ())


def complement(G: LabeledGraph) -> LabeledGraph:
    return LabeledGraph(G.n, G.deleted_edges())


def degree(G: LabeledGraph, v: int) -> int:
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range for n={G.n}")
    return sum(1 for e in G.edges if v in e)


def degrees(G: LabeledGraph) -> list[int]:
    deg = [0] * G.n
    for u, v in G.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def complement_deleted_degrees(G: LabeledGraph) -> list[int]:
    """Missing-edge count ``(n-1) - deg(v)`` for each non-target vertex 3..n-1."""
    deg = degrees(G)
    return [G.n - 1 - deg[v] for v in range(3, G.n)]


# ---------------------------------------------------------------------------
# canonical forms

def edge_index_table(n: int) -> dict[Edge, int]:
    return {e: i for i, e in enumerate(itertools.combinations(range(n), 2))}


@lru_cache(maxsize=None)
def _edge_list(n: int) -> tuple[Edge, ...]:
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _edge_action(n: int, fixed_block: int) -> np.ndarray:
    """Edge-index images under the permutation group, one row per permutation.

    ``fixed_block`` is 3 for the target-setwise stabiliser (targets permuted
    among themselves) and 0 for the full symmetric group.
    """
    if n > MAX_CANON_VERTICES or (fixed_block == 0 and n > 8):
        raise BudgetExceeded(f"canonicalisation by permutation sweep limited to n <= {MAX_CANON_VERTICES}")
    edges = _edge_list(n)
    index = {e: i for i, e in enumerate(edges)}
    if fixed_block:
        k = min(fixed_block, n)
        perms = [
            head + tail
            for head in itertools.permutations(range(k))
            for tail in itertools.permutations(range(k, n))
        ]
    else:
        perms = list(itertools.permutations(range(n)))
    P = np.array(perms, dtype=np.int64)
    E = np.array(edges, dtype=np.int64).reshape(-1, 2)
    a, b = P[:, E[:, 0]], P[:, E[:, 1]]
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    # edge (u,v) with u<v has index  u*n - u*(u+1)/2 + (v-u-1)
    act = lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)
    assert all(index[e] == i for i, e in enumerate(edges))
    return act


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    # edge i carries weight 2^(E-1-i): comparing masks numerically is
    # comparing sorted edge lists lexicographically (reversed)
    E = math.comb(n, 2)
    return np.array([1 << (E - 1 - i) for i in range(E)], dtype=np.int64)


def _orbit_masks(n: int, idx: Sequence[int], fixed_block: int) -> np.ndarray:
    """Masks of every image of the edge-index set ``idx`` under the group."""
    act = _edge_action(n, fixed_block)
    w = _weights(n)
    if len(idx) == 0:
        return np.zeros(1, dtype=np.int64)
    return w[act[:, list(idx)]].sum(axis=1)


def _canonical_mask(n: int, idx: Sequence[int], fixed_block: int) -> int:
    E = math.comb(n, 2)
    if len(idx) * 2 <= E:
        return int(_orbit_masks(n, idx, fixed_block).max())
    present = set(idx)
    missing = [i for i in range(E) if i not in present]
    full = (1 << E) - 1
    return full - int(_orbit_masks(n, missing, fixed_block).min())


def _mask_to_edges(n: int, mask: int) -> tuple[Edge, ...]:
    E = math.comb(n, 2)
    edges = _edge_list(n)
    return tuple(edges[i] for i in range(E) if mask >> (E - 1 - i) & 1)


def _key_bytes(n: int, fixed_block: int, mask: int) -> bytes:
    E = math.comb(n, 2)
    return bytes([n, fixed_block]) + mask.to_bytes(max(1, (E + 7) // 8), "big")


def _edge_indices(G: LabeledGraph) -> list[int]:
    table = edge_index_table(G.n)
    return [table[e] for e in G.edges]


def canonical_key(G: LabeledGraph) -> CanonicalKey:
    """Key shared by exactly the graphs equivalent under target-stabilising relabelings."""
    return _key_bytes(G.n, 3, _canonical_mask(G.n, _edge_indices(G), 3))


def canonical_form(G: LabeledGraph) -> LabeledGraph:
    """The lexicographically smallest edge list in the class of ``G``."""
    mask = _canonical_mask(G.n, _edge_indices(G), 3)
    return LabeledGraph(G.n, _mask_to_edges(G.n, mask))


def plain_canonical_key(n: int, edges: Iterable[Sequence[int]]) -> CanonicalKey:
    """Isomorphism key for an ordinary graph on ``n`` vertices (no targets)."""
    table = edge_index_table(n)
    idx = [table[_norm_edge(int(u), int(v))] for u, v in edges]
    return _key_bytes(n, 0, _canonical_mask(n, idx, 0))


def plain_canonical_edges(n: int, edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    table = edge_index_table(n)
    idx = [table[_norm_edge(int(u), int(v))] for u, v in edges]
    return _mask_to_edges(n, _canonical_mask(n, idx, 0))


def target_stabilizing_permutations(n: int) -> list[tuple[int, ...]]:
    return [
        head + tail
        for head in itertools.permutations(range(3))
        for tail in itertools.permutations(range(3, n))
    ]


@dataclass(frozen=True)
class GraphClass:
    graph: LabeledGraph
    key: CanonicalKey
    orbit_size: int


def gnm_classes(n: int, m: int, budget: int = DEFAULT_BUDGET) -> list[GraphClass]:
    """One entry per class of G(n, m), sorted by key, with labelled orbit sizes.

    Labelled graphs are swept as deleted-edge sets of K_n (or as edge sets
    when that is the smaller side); every orbit is marked off as soon as its
    first member is met, so each class is canonicalised once.
    """
    E = math.comb(n, 2)
    if not 0 <= m <= E:
        raise ValueError(f"m={m} outside [0, {E}] for n={n}")
    deleted_side = E - m <= m
    k = E - m if deleted_side else m
    total = math.comb(E, k)
    if total > budget:
        raise BudgetExceeded(f"G({n},{m}) has {total} labelled graphs, budget {budget}")
    w = [1 << (E - 1 - i) for i in range(E)]
    full = (1 << E) - 1
    seen: set[int] = set()
    classes = []
    for combo in itertools.combinations(range(E), k):
        mask = sum(w[i] for i in combo)
        if mask in seen:
            continue
        orbit = {int(x) for x in _orbit_masks(n, combo, 3)}
        seen.update(orbit)
        present_mask = full - min(orbit) if deleted_side else max(orbit)
        key = _key_bytes(n, 3, present_mask)
        classes.append(GraphClass(LabeledGraph(n, _mask_to_edges(n, present_mask)), key, len(orbit)))
    classes.sort(key=lambda c: c.key)
    return classes


def enumerate_gnm(n: int, m: int, budget: int = DEFAULT_BUDGET) -> list[LabeledGraph]:
    """Representatives of every class of three-terminal graphs with n vertices, m edges."""
    return [c.graph for c in gnm_classes(n, m, budget)]


# ---------------------------------------------------------------------------
# small-pattern counts on the non-target part

PATTERNS = ("P3", "P4", "K3", "K13")


def count_nontarget_subgraphs(G: LabeledGraph, pattern: str) -> int:
    """Number of (not necessarily induced) copies of ``pattern`` inside G[v3..v_{n-1}]."""
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}; expected one of {PATTERNS}")
    edges = [e for e in G.edges if e[0] >= 3]
    deg = [0] * G.n
    adj = [set() for _ in range(G.n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].add(v)
        adj[v].add(u)
    triangles = sum(len(adj[u] & adj[v]) for u, v in edges) // 3
    if pattern == "P3":
        return sum(math.comb(d, 2) for d in deg)
    if pattern == "K13":
        return sum(math.comb(d, 3) for d in deg)
    if pattern == "K3":
        return triangles
    return sum((deg[u] - 1) * (deg[v] - 1) for u, v in edges) - 3 * triangles


# ---------------------------------------------------------------------------
# text / JSON formats

_PAIR = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def _parse_pairs(text: str) -> list[Edge]:
    pairs = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        match = _PAIR.match(chunk)
        if not match:
            raise ValueError(f"bad vertex pair {chunk!r}")
        pairs.append((int(match.group(1)), int(match.group(2))))
    return pairs


def parse_graph(line: str) -> LabeledGraph:
    """Parse ``n=<int>; deleted=<u-v,...>`` or ``[n=<int>;] edges=<u-v,...>``."""
    fields = {}
    for part in line.strip().split(";"):
        if not part.strip():
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"expected name=value, got {part!r}")
        fields[name.strip()] = value.strip()
    unknown = set(fields) - {"n", "deleted", "edges"}
    if unknown:
        raise ValueError(f"unknown field(s) {sorted(unknown)}")
    if "deleted" in fields and "edges" in fields:
        raise ValueError("give either deleted= or edges=, not both")
    if "deleted" in fields:
        if "n" not in fields:
            raise ValueError("deleted= requires n=")
        return from_complete_minus(int(fields["n"]), _parse_pairs(fields["deleted"]))
    if "edges" in fields:
        edges = _parse_pairs(fields["edges"])
        n = int(fields["n"]) if "n" in fields else max([3] + [max(e) + 1 for e in edges])
        return LabeledGraph(n, tuple(edges))
    if "n" in fields:
        return complete_graph(int(fields["n"]))
    raise ValueError(f"empty graph spec {line!r}")


def format_graph(G: LabeledGraph, style: str = "auto") -> str:
    if style == "auto":
        style = "deleted" if G.num_deleted <= G.m else "edges"
    if style == "deleted":
        return f"n={G.n}; deleted=" + ",".join(f"{u}-{v}" for u, v in G.deleted_edges())
    if style == "edges":
        return f"n={G.n}; edges=" + ",".join(f"{u}-{v}" for u, v in G.edges)
    raise ValueError(f"unknown style {style!r}")


def graph_to_dict(G: LabeledGraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_dict(data: dict) -> LabeledGraph:
    return LabeledGraph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def graph_to_json(G: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(G), sort_keys=True)


def graph_from_json(text: str) -> LabeledGraph:
    return graph_from_dict(json.loads(text))

"""Dependence DAGs of gate words, prefix/suffix splitting, and Cheeger partitions."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .coxeter import CoxeterGraph, CoxeterMatrix, reduce
from .errors import Disconnected

START = -1


@dataclass(frozen=True)
class DependenceDag:
    """Vertices are word positions plus ``START``; arcs run from earlier to later."""

    word: tuple
    edges: frozenset

    @property
    def predecessors(self) -> dict:
        preds = {v: set() for v in range(len(self.word))}
        for u, v in self.edges:
            preds[v].add(u)
        return preds

    def ancestors(self, positions: Iterable[int]) -> set:
        preds = self.predecessors
        out, stack = set(), list(positions)
        while stack:
            v = stack.pop()
            if v == START or v in out:
                continue
            out.add(v)
            stack.extend(preds[v])
        return out

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_node(START, label="START")
        for pos, gen in enumerate(self.word):
            g.add_node(pos, generator=gen)
        g.add_edges_from(self.edges)
        return g

    def topological_order(self, rng: random.Random | None = None) -> list:
        """A topological order of the positions; lowest position first unless ``rng`` is given."""
        import heapq

        indeg = {v: 0 for v in range(len(self.word))}
        succ = {v: [] for v in [START, *indeg]}
        for u, v in self.edges:
            succ[u].append(v)
            indeg[v] += 1
        ready = [v for v in succ[START] if indeg[v] == 1]
        for v in succ[START]:
            indeg[v] -= 1
        heapq.heapify(ready)
        order = []
        while ready:
            if rng is None:
                v = heapq.heappop(ready)
            else:
                v = ready.pop(rng.randrange(len(ready)))
            order.append(v)
            for u in succ[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    if rng is None:
                        heapq.heappush(ready, u)
                    else:
                        ready.append(u)
        return order

    def to_dot(self, labels: Sequence[str] | None = None) -> str:
        out = ["digraph dependence {", '  "START";']
        for pos, gen in enumerate(self.word):
            name = labels[gen] if labels else str(gen + 1)
            out.append(f'  "{pos + 1}" [label="{pos + 1}:{name}"];')
        for u, v in sorted(self.edges):
            src = "START" if u == START else str(u + 1)
            out.append(f'  "{src}" -> "{v + 1}";')
        out.append("}")
        return "\n".join(out) + "\n"


def build_dag(matrix: CoxeterMatrix, w: Sequence[int]) -> DependenceDag:
    """Each position depends on the latest earlier occurrence of every non-commuting generator.

    Only commutation (``m_ij == 2`` or not) is consulted; a position with no
    such predecessor hangs off ``START``.
    """
    last: dict[int, int] = {}
    edges = set()
    for pos, g in enumerate(w):
        deps = [p for h, p in last.items() if not matrix.commute(g, h)]
        if deps:
            edges.update((p, pos) for p in deps)
        else:
            edges.add((START, pos))
        last[g] = pos
    return DependenceDag(tuple(w), frozenset(edges))


@dataclass(frozen=True)
class Split:
    prefix: list
    suffix: list
    prefix_positions: list
    suffix_positions: list
    prefix_matrix: CoxeterMatrix | None
    suffix_matrix: CoxeterMatrix | None

    @property
    def ratio(self) -> Fraction:
        total = len(self.prefix) + len(self.suffix)
        return Fraction(len(self.prefix), total) if total else Fraction(0)


def split_word(matrix: CoxeterMatrix, w: Sequence[int], S: Iterable[int]) -> Split:
    """Move ``S`` and all its DAG predecessors to the front of the word.

    Both parts keep the original relative order, which is a topological
    order of each induced subgraph.  The restricted Coxeter matrices over
    the generators occurring in each part are reported alongside.
    """
    dag = build_dag(matrix, w)
    head = dag.ancestors(S)
    pre = sorted(head)
    suf = [p for p in range(len(w)) if p not in head]

    def restricted(positions):
        gens = sorted({w[p] for p in positions})
        return matrix.submatrix(gens) if gens else None

    return Split(
        [w[p] for p in pre],
        [w[p] for p in suf],
        pre,
        suf,
        restricted(pre),
        restricted(suf),
    )


def middle_third(length: int) -> set:
    """Positions of the middle third, sized so the split ratio lands in [1/3, 2/3]."""
    hi = (2 * length) // 3
    lo = max(0, hi - -(-length // 3))
    return set(range(lo, hi))


# -- Cheeger constant ---------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    A: frozenset
    complement: frozenset
    cut_edges: int
    ratio: Fraction
    mode: str = "exact"

    def to_json(self) -> str:
        return json.dumps(
            {
                "h": str(self.ratio),
                "A": sorted(v + 1 for v in self.A),
                "cut_edges": self.cut_edges,
                "mode": self.mode,
            }
        )


def _as_graph(graph) -> CoxeterGraph:
    return graph.graph if isinstance(graph, CoxeterMatrix) else graph


def _partition(graph: CoxeterGraph, A, mode) -> Partition:
    A = frozenset(A)
    comp = frozenset(range(graph.n_vertices)) - A
    cut = sum(1 for i, j, _ in graph.edges if (i in A) != (j in A))
    return Partition(A, comp, cut, Fraction(cut, min(len(A), len(comp))), mode)


def cheeger(graph, mode: str = "exact", seeds: int = 32, seed: int = 0):
    """Cheeger constant ``min |E(A, A^c)| / min(|A|, |A^c|)`` with a witness partition.

    ``exact`` enumerates every bipartition (at most 20 vertices).  ``local``
    runs greedy single-vertex moves from ``seeds`` random starts and returns
    an upper bound.
    """
    g = _as_graph(graph)
    n = g.n_vertices
    if n < 2:
        raise ValueError("the Cheeger constant needs at least two vertices")
    if len(g.components()) > 1:
        raise Disconnected("graph is disconnected (Cheeger constant 0)")
    if mode == "exact":
        if n > 20:
            raise ValueError("exact mode is limited to 20 vertices")
        return _cheeger_exact(g)
    if mode == "local":
        return _cheeger_local(g, seeds, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _cheeger_exact(g: CoxeterGraph):
    n = g.n_vertices
    # vertex n-1 always sits in the complement
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    cut = np.zeros(masks.size, dtype=np.int64)
    for i, j, _ in g.edges:
        cut += ((masks >> i) ^ (masks >> j)) & 1
    size = np.zeros(masks.size, dtype=np.int64)
    for v in range(n - 1):
        size += (masks >> v) & 1
    small = np.minimum(size, n - size)
    # minimise cut/small exactly: compare cross products against the running best
    best = 0
    for k in range(1, masks.size):
        if cut[k] * small[best] < cut[best] * small[k]:
            best = k
    A = {v for v in range(n) if (int(masks[best]) >> v) & 1}
    p = _partition(g, A, "exact")
    return p.ratio, p


def _cheeger_local(g: CoxeterGraph, seeds: int, seed: int):
    rng = random.Random(seed)
    n = g.n_vertices
    best = None
    for _ in range(seeds):
        verts = list(range(n))
        rng.shuffle(verts)
        A = set(verts[: max(1, n // 2)])
        current = _partition(g, A, "local")
        while True:
            moves = []
            for v in range(n):
                B = A ^ {v}
                if 0 < len(B) < n:
                    moves.append(_partition(g, B, "local"))
            cand = min(moves, key=lambda p: (p.ratio, sorted(p.A)), default=None)
            if cand is None or cand.ratio >= current.ratio:
                break
            current, A = cand, set(cand.A)
        if best is None or current.ratio < best.ratio:
            best = current
    return best.ratio, best


def partition_compile(matrix: CoxeterMatrix, w: Sequence[int], parts: int = 2) -> list:
    """Split ``w`` into ``parts`` words whose concatenation equals ``w``.

    The generator set of ``w`` is bipartitioned by a Cheeger witness (or a
    connected component when the restricted graph is disconnected) and the
    word is split on the first side with :func:`split_word`.  ``parts`` must
    be a power of two; larger counts recurse.
    """
    if parts < 1 or parts & (parts - 1):
        raise ValueError("parts must be a power of two")
    w = list(w)
    if parts == 1:
        return [w]
    gens = sorted(set(w))
    if len(gens) < 2:
        halves = [w, []]
    else:
        sub = matrix.graph.induced(gens)
        comps = sub.components()
        if len(comps) > 1:
            side = comps[0]
        else:
            _, witness = cheeger(sub, "exact" if len(gens) <= 20 else "local")
            side = witness.A
        chosen = {gens[k] for k in side}
        split = split_word(matrix, w, [p for p, g in enumerate(w) if g in chosen])
        halves = [split.prefix, split.suffix]
    if parts == 2:
        return halves
    return [piece for h in halves for piece in partition_compile(matrix, h, parts // 2)]


def partition_report(matrix: CoxeterMatrix, w: Sequence[int], parts: int = 2) -> dict:
    """Lengths after reducing each part on its own, against reducing the whole word."""
    pieces = partition_compile(matrix, w, parts)
    reduced = [reduce(matrix, p) for p in pieces]
    whole = len(reduce(matrix, w))
    total = sum(map(len, reduced))
    return {
        "parts": [len(p) for p in pieces],
        "reduced_parts": [len(r) for r in reduced],
        "reduced_total": total,
        "reduced_whole": whole,
        "slack": total - whole,
    }

"""Coxeter matrices, the geometric representation, and word reduction.

Words are sequences of 0-based generator indices.  Conversion to the 1-based
numbering used in files and on the command line happens at the I/O edge
(:func:`parse_word`, :func:`format_word`).

Reduction works in the geometric representation: simple roots are unit
vectors, generator ``i`` acts by ``v -> v - B(v, a_i) a_i`` and the form
``B`` takes values ``-2 cos(pi/m)``.  Roots are kept exactly in
``Z[sqrt2, sqrt3]`` (see :mod:`coxc.ring`), so only crystallographic
matrices can be reduced.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ArithmeticOverflow, InvalidMatrix, UnsupportedOrder
from .ring import ONE, TWO_COS, ZERO, Z23

INF = math.inf
CRYSTALLOGRAPHIC = frozenset({1, 2, 3, 4, 6, INF})

Word = list  # list[int], 0-based generator indices


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple
    labels: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(INF if m in (0, INF) else int(m) for m in row) for row in self.entries)
        r = len(rows)
        if r == 0:
            raise InvalidMatrix("a Coxeter matrix needs at least one generator")
        labels = tuple(self.labels) if self.labels else tuple(f"r{i + 1}" for i in range(r))
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "labels", labels)
        if len(labels) != r or len(set(labels)) != r:
            raise InvalidMatrix("labels must be unique and one per generator")
        for i, row in enumerate(rows):
            if len(row) != r:
                raise InvalidMatrix(f"row {i + 1} has {len(row)} entries, expected {r}")
            if row[i] != 1:
                raise InvalidMatrix(f"diagonal entry {i + 1} must be 1")
            for j, m in enumerate(row):
                if m != rows[j][i]:
                    raise InvalidMatrix(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
                if i != j and m < 2:
                    raise InvalidMatrix(f"off-diagonal entry ({i + 1},{j + 1}) must be >= 2")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def commute(self, i: int, j: int) -> bool:
        """True iff m_ij == 2; a generator is not counted as commuting with itself."""
        return self.entries[i][j] == 2

    @cached_property
    def graph(self) -> CoxeterGraph:
        edges = tuple(
            (i, j, self.entries[i][j])
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if self.entries[i][j] >= 3
        )
        return CoxeterGraph(self.rank, edges)

    @cached_property
    def _reflection_table(self):
        # for generator i: list of (neighbour j, multiplier code) with 2cos(pi/m_ij) != 0
        table = []
        for i, row in enumerate(self.entries):
            nbrs = []
            for j, m in enumerate(row):
                if j == i or m == 2:
                    continue
                key = 0 if m == INF else m
                if key not in TWO_COS:
                    nbrs = None
                    break
                nbrs.append((j, key))
            table.append(nbrs)
        return table

    def submatrix(self, indices: Sequence[int]) -> CoxeterMatrix:
        idx = list(indices)
        return CoxeterMatrix(
            tuple(tuple(self.entries[i][j] for j in idx) for i in idx),
            tuple(self.labels[i] for i in idx),
        )

    def to_json(self) -> str:
        matrix = [[0 if m == INF else m for m in row] for row in self.entries]
        return json.dumps({"rank": self.rank, "labels": list(self.labels), "matrix": matrix})

    @classmethod
    def from_json(cls, text: str) -> CoxeterMatrix:
        data = json.loads(text)
        try:
            rank, labels, matrix = data["rank"], data["labels"], data["matrix"]
        except (KeyError, TypeError) as exc:
            raise InvalidMatrix(f"missing field in Coxeter matrix JSON: {exc}") from None
        if len(matrix) != rank:
            raise InvalidMatrix(f"rank {rank} does not match {len(matrix)} rows")
        return cls(tuple(tuple(row) for row in matrix), tuple(labels))

    @classmethod
    def from_edges(cls, rank: int, edges: Iterable[tuple], one_based: bool = True) -> CoxeterMatrix:
        """Matrix with 2 everywhere except the listed ``(i, j, m)`` edges."""
        rows = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        for i, j, m in edges:
            if one_based:
                i, j = i - 1, j - 1
            rows[i][j] = rows[j][i] = m
        return cls(tuple(map(tuple, rows)))

    def __str__(self) -> str:
        return "\n".join(" ".join("∞" if m == INF else str(m) for m in row) for row in self.entries)


@dataclass(frozen=True)
class CoxeterGraph:
    n_vertices: int
    edges: tuple = field(default=())

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n_vertices)]
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, i: int) -> frozenset:
        return self.adjacency[i]

    def induced(self, vertices: Sequence[int]) -> CoxeterGraph:
        """Subgraph on ``vertices``, relabelled 0..len-1 in the given order."""
        pos = {v: k for k, v in enumerate(vertices)}
        edges = tuple((pos[i], pos[j], m) for i, j, m in self.edges if i in pos and j in pos)
        return CoxeterGraph(len(vertices), edges)

    def components(self) -> list:
        seen = [False] * self.n_vertices
        comps = []
        for s in range(self.n_vertices):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps


# -- geometric representation -------------------------------------------------


def _check_order(m) -> int:
    key = 0 if m == INF else m
    if key not in TWO_COS:
        raise UnsupportedOrder(f"order {m} is not crystallographic (allowed: 2, 3, 4, 6, inf)")
    return key


def bilinear_form(matrix: CoxeterMatrix, i: int, j: int) -> Z23:
    """``B(a_i, a_j) = -2 cos(pi / m_ij)`` as an exact ring element."""
    if i == j:
        return Z23(2)
    return -TWO_COS[_check_order(matrix[i, j])]


def simple_root(matrix: CoxeterMatrix, i: int) -> list:
    v = [ZERO] * matrix.rank
    v[i] = ONE
    return v


def _scaled(x: Z23, key: int) -> Z23:
    if key == 3:
        return x
    if key == 4:
        return x.times_sqrt2()
    if key == 6:
        return x.times_sqrt3()
    return x * 2  # infinity


def _neighbour_table(matrix: CoxeterMatrix):
    table = matrix._reflection_table
    for i, nbrs in enumerate(table):
        if nbrs is None:
            bad = next(m for m in matrix.entries[i] if (0 if m == INF else m) not in TWO_COS and m != 1)
            raise UnsupportedOrder(f"order {bad} is not crystallographic (allowed: 2, 3, 4, 6, inf)")
    return table


def _reflect(table, i: int, v: list, limit: int | None) -> None:
    # only coordinate i changes: v_i -> -v_i + sum_j 2cos(pi/m_ij) v_j
    acc = -v[i]
    for j, key in table[i]:
        vj = v[j]
        if vj != ZERO:
            acc = acc + _scaled(vj, key)
    if limit is not None and acc.max_abs() > limit:
        raise ArithmeticOverflow(
            f"root coordinate {acc} exceeds the configured integer width"
        )
    v[i] = acc


def apply_generator(matrix: CoxeterMatrix, i: int, v: Sequence[Z23]) -> list:
    """Return ``s_i(v)`` without modifying ``v``."""
    if not 0 <= i < matrix.rank:
        raise IndexError(f"generator index {i} out of range for rank {matrix.rank}")
    out = [Z23.of(x) for x in v]
    _reflect(_neighbour_table(matrix), i, out, None)
    return out


def root_sign(v: Sequence[Z23]) -> int:
    """1 for a positive root, -1 for a negative one, 0 if signs are mixed or v is zero."""
    signs = {x.sign() for x in v} - {0}
    return signs.pop() if len(signs) == 1 else 0


def _limit(width: int | None) -> int | None:
    return None if width is None else (1 << (width - 1)) - 1


def reduce(
    matrix: CoxeterMatrix,
    w: Sequence[int],
    *,
    width: int | None = 64,
    check_roots: bool = False,
) -> Word:
    """Reduce ``w`` to a word of minimal length for the same group element.

    Letters are processed left to right while the running prefix is kept
    reduced.  Appending ``t`` to a reduced prefix ``p`` shortens it exactly
    when ``p(a_t)`` is negative; the deleted letter is found by applying the
    prefix letters right-to-left to ``a_t`` until the root is a simple root
    about to be negated.

    ``width`` bounds root coordinates as signed integers of that many bits
    (``None`` disables the check).  ``check_roots`` asserts that every root
    met during the scan is positive.
    """
    table = _neighbour_table(matrix)
    limit = _limit(width)
    r = matrix.rank
    prefix: list[int] = []
    for t in w:
        if not 0 <= t < r:
            raise IndexError(f"generator index {t} out of range for rank {r}")
        v = [ZERO] * r
        v[t] = ONE
        support = 1
        hit = -1
        for pos in range(len(prefix) - 1, -1, -1):
            s = prefix[pos]
            if v[s] == ONE and support == 1:
                hit = pos
                break
            before = v[s] == ZERO
            _reflect(table, s, v, limit)
            after = v[s] == ZERO
            support += before - after
            if check_roots and root_sign(v) != 1:
                raise AssertionError(f"root lost sign coherence: {[str(x) for x in v]}")
        if hit >= 0:
            del prefix[hit]
        else:
            prefix.append(t)
    return prefix


def is_reduced(matrix: CoxeterMatrix, w: Sequence[int], **kw) -> bool:
    return len(reduce(matrix, w, **kw)) == len(w)


def words_equal(matrix: CoxeterMatrix, u: Sequence[int], v: Sequence[int], **kw) -> bool:
    # generators are involutions, so the inverse of v is v reversed
    return not reduce(matrix, list(u) + list(reversed(v)), **kw)


# -- structural queries -------------------------------------------------------


def intervening_neighbors(matrix: CoxeterMatrix, w: Sequence[int]) -> bool:
    """True iff every neighbour of ``i`` occurs between any two consecutive ``i``s.

    Adjacent repeated letters always fail, even for a generator without
    neighbours.
    """
    graph = matrix.graph
    last: dict[int, int] = {}
    for pos, g in enumerate(w):
        if g in last:
            start = last[g]
            if start == pos - 1:
                return False
            between = set(w[start + 1 : pos])
            if not graph.neighbors(g) <= between:
                return False
        last[g] = pos
    return True


class Finiteness(str, enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    DISCONNECTED = "disconnected"


def _arm_lengths(adj, center):
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def finite_type(matrix: CoxeterMatrix) -> str | None:
    """Name of the finite type of a connected matrix (``"A3"``, ``"E8"``, ...), else None."""
    g = matrix.graph
    r = matrix.rank
    if len(g.components()) != 1:
        return None
    if r == 1:
        return "A1"
    labels = [m for _, _, m in g.edges]
    if INF in labels:
        return None
    if r == 2:
        m = labels[0]
        return "A2" if m == 3 else "B2" if m == 4 else f"I2({m})"
    if len(g.edges) != r - 1:  # cycles are never finite
        return None
    adj = g.adjacency
    degrees = [len(a) for a in adj]
    if max(degrees) > 3:
        return None
    branch = [v for v in range(r) if degrees[v] == 3]
    heavy = [(i, j, m) for i, j, m in g.edges if m > 3]
    if len(branch) > 1 or len(heavy) > 1:
        return None
    if branch:
        if heavy:
            return None
        p, q, s = _arm_lengths(adj, branch[0])
        if p == 1 and q == 1:
            return f"D{r}"
        if (p, q) == (1, 2) and s in (2, 3, 4):
            return f"E{r}"
        return None
    if not heavy:
        return f"A{r}"
    i, j, m = heavy[0]
    at_end = degrees[i] == 1 or degrees[j] == 1
    if m == 4:
        if at_end:
            return f"B{r}"
        return "F4" if r == 4 else None
    if m == 5 and at_end and r in (3, 4):
        return f"H{r}"
    return None


def is_infinite_irreducible(matrix: CoxeterMatrix) -> Finiteness:
    if len(matrix.graph.components()) > 1:
        return Finiteness.DISCONNECTED
    return Finiteness.FINITE if finite_type(matrix) else Finiteness.INFINITE


def abelian_generator_sets(graph: CoxeterGraph, max_count: int = 1000) -> list:
    """Maximal independent sets of the Coxeter graph, at most ``max_count`` of them.

    Each set is a family of pairwise commuting generators.  Enumeration is
    Bron-Kerbosch with pivoting on the complement graph, so branches that
    cannot yield a new maximal set are cut.
    """
    n = graph.n_vertices
    allv = frozenset(range(n))
    # independent in G == clique in the complement
    comp = [allv - graph.neighbors(v) - {v} for v in range(n)]
    found: list[frozenset] = []

    def expand(chosen, candidates, excluded):
        if len(found) >= max_count:
            return
        if not candidates and not excluded:
            found.append(frozenset(chosen))
            return
        pivot = max(candidates | excluded, key=lambda u: len(comp[u] & candidates))
        for v in sorted(candidates - comp[pivot]):
            expand(chosen | {v}, candidates & comp[v], excluded & comp[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(frozenset(), allv, frozenset())
    return sorted(found, key=lambda s: (-len(s), sorted(s)))


# -- Dehn rewriting -------------------------------------------------------------


def dehn_reduce(
    matrix: CoxeterMatrix, relators: Sequence[Sequence[int]], w: Sequence[int], **kw
) -> Word:
    """Coxeter reduction interleaved with Dehn's greedy relator rewriting.

    ``relators`` must be closed under rotation and reversal.  A subword equal
    to a prefix ``u`` of a relator ``u v`` with ``|u| > |v|`` is replaced by
    ``reverse(v)``.  Scan order: leftmost position, then longest fragment,
    then relator input order.
    """
    rels = [tuple(r) for r in relators if len(r) > 0]
    word = reduce(matrix, w, **kw)
    while True:
        replaced = False
        for start in range(len(word)):
            best = None
            for rel in rels:
                n = len(rel)
                for k in range(min(n, len(word) - start), n // 2, -1):
                    if best is not None and k <= best[0]:
                        break
                    if tuple(word[start : start + k]) == rel[:k]:
                        best = (k, rel)
                        break
            if best is not None:
                k, rel = best
                word = word[:start] + list(reversed(rel[k:])) + word[start + k :]
                replaced = True
                break
        if not replaced:
            return word
        word = reduce(matrix, word, **kw)


# -- word I/O -------------------------------------------------------------------


def parse_word(text: str, matrix: CoxeterMatrix | None = None) -> Word:
    """Parse a 1-based word like ``"1 2 1"``; labels are accepted when a matrix is given."""
    out = []
    lookup = {lab: k for k, lab in enumerate(matrix.labels)} if matrix else {}
    for tok in text.replace(",", " ").split():
        if tok.lstrip("-").isdigit():
            k = int(tok) - 1
        elif tok in lookup:
            k = lookup[tok]
        else:
            raise ValueError(f"unknown generator {tok!r}")
        if k < 0 or (matrix is not None and k >= matrix.rank):
            raise ValueError(f"generator {tok} out of range")
        out.append(k)
    return out


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(g + 1) for g in w)

"""Mining relators among three gates that the Coxeter presentation misses."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .coxeter import CoxeterMatrix, apply_generator, reduce, root_sign, simple_root
from .errors import NotARelator, ParseError
from .gates import (
    ExactUnitary,
    Gate,
    PermutationTable,
    _support_map,
    _workers,
    element,
    extract_coxeter_matrix,
    is_crystallographic,
    word_permutation,
    word_unitary,
)

DEFAULT_BUDGET = 10**7


@dataclass
class RelatorSet:
    """Relators as words of 0-based generator indices."""

    relators: list
    closed: bool = False
    truncated: bool = False
    skipped: list = field(default_factory=list)
    candidates: int = 0

    def __len__(self):
        return len(self.relators)

    def __iter__(self):
        return iter(self.relators)


def canonical(w: Sequence[int]) -> tuple:
    """Smallest rotation of ``w`` or of its reversal."""
    w = tuple(w)
    if not w:
        return w
    forms = [w, w[::-1]]
    return min(f[k:] + f[:k] for f in forms for k in range(len(f)))


def supports_connected(gates: Sequence[Gate]) -> bool:
    """True when the graph joining gates with overlapping lines is connected."""
    seen, stack = {0}, [0]
    while stack:
        a = stack.pop()
        for b in range(len(gates)):
            if b not in seen and set(gates[a].lines) & set(gates[b].lines):
                seen.add(b)
                stack.append(b)
    return len(seen) == len(gates)


def is_identity_word(gates: Sequence[Gate], word: Sequence[int], quantum: bool = False) -> bool:
    """Evaluate ``word`` (indices into ``gates``) on the union of its lines."""
    used = [gates[k] for k in word]
    if not used:
        return True
    mapping, n = _support_map(used)
    local = [g.relabel(mapping) for g in used]
    if quantum or not all(g.reversible for g in local):
        return word_unitary(local, n).is_identity()
    return word_permutation(local, n).is_identity()


def _mine_triple(gates, matrix: CoxeterMatrix, max_len: int, quantum: bool, budget: int):
    """Depth-first search over Coxeter-reduced words using all three letters."""
    mapping, n = _support_map(gates)
    elems = [element(g.relabel(mapping), n, quantum) for g in gates]
    perm = isinstance(elems[0], PermutationTable)
    if perm:
        start = np.arange(1 << n)
        imgs = [e.images for e in elems]
    else:
        start = ExactUnitary.identity(1 << n)
    found, visited = [], 0

    def dfs(word, state):
        nonlocal visited
        if len(word) >= 3 and len(set(word)) == 3:
            done = np.array_equal(state, start) if perm else state.is_identity()
            if done:
                found.append(list(word))
        if len(word) == max_len:
            return True
        for t in range(3):
            if word and word[-1] == t:
                continue
            # word.t stays reduced iff word(alpha_t) is a positive root
            v = simple_root(matrix, t)
            for s in reversed(word):
                v = apply_generator(matrix, s, v)
            if root_sign(v) < 0:
                continue
            visited += 1
            if visited > budget:
                return False
            nxt = imgs[t][state] if perm else elems[t] @ state
            word.append(t)
            ok = dfs(word, nxt)
            word.pop()
            if not ok:
                return False
        return True

    complete = dfs([], start)
    return found, visited, not complete


def mine_r3(
    generators: Sequence[Gate],
    max_len: int = 8,
    lines: int = 7,
    *,
    quantum: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> RelatorSet:
    """Relators in exactly three of ``generators`` with overlapping supports.

    Only Coxeter-reduced words are enumerated, so every emitted relator is
    nonempty after :func:`~coxc.coxeter.reduce` and is already in reduced
    form.  Words with a rotation that is not reduced are dropped: they are
    conjugates of shorter relators.  Results are deduplicated up to rotation and reversal and listed
    by length, then lexicographically.  ``budget`` caps the candidate words
    visited per triple; when any triple runs out, the partial result
    carries ``truncated=True``.
    Triples whose Coxeter matrix is not crystallographic are listed in
    ``skipped``.
    """
    gens = list(generators)
    if lines > 7:
        raise ValueError("relator mining is limited to 7 lines")
    for g in gens:
        if g.max_line > lines:
            raise ValueError(f"{g} does not fit on {lines} lines")
    matrix = extract_coxeter_matrix(gens, lines, quantum=quantum, assume_infinite=True)
    triples = [t for t in combinations(range(len(gens)), 3) if supports_connected([gens[k] for k in t])]

    def work(triple):
        sub = matrix.submatrix(triple)
        if not is_crystallographic(sub):
            return triple, None, 0, False
        found, visited, cut = _mine_triple([gens[k] for k in triple], sub, max_len, quantum, budget)
        # a rotation that shortens is a conjugate of a shorter relator, found on its own
        found = [w for w in found if all(len(reduce(sub, w[k:] + w[:k])) == len(w) for k in range(len(w)))]
        return triple, [[triple[k] for k in w] for w in found], visited, cut

    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(work, triples))
    else:
        results = [work(t) for t in triples]

    seen, relators, skipped = set(), [], []
    total, truncated = 0, False
    for triple, words, visited, cut in results:
        if words is None:
            skipped.append(triple)
            continue
        total += visited
        truncated |= cut
        for w in words:
            key = canonical(w)
            if key not in seen:
                seen.add(key)
                relators.append(list(key))
    relators.sort(key=lambda w: (len(w), w))
    return RelatorSet(relators, False, truncated, skipped, total)


def close_relator_set(
    relators, generators: Sequence[Gate] | None = None, quantum: bool = False
) -> RelatorSet:
    """Close under rotation and reversal.  With ``generators``, each input is checked first."""
    words = list(relators.relators if isinstance(relators, RelatorSet) else relators)
    if generators is not None:
        for idx, w in enumerate(words):
            if not is_identity_word(generators, w, quantum):
                raise NotARelator(idx)
    out = set()
    for w in words:
        w = tuple(w)
        for f in (w, w[::-1]):
            for k in range(len(f)):
                out.add(f[k:] + f[:k])
    return RelatorSet(sorted((list(w) for w in out if w), key=lambda w: (len(w), w)), True)


# -- relator files ---------------------------------------------------------------


def format_relators(rs, labels: Sequence[str], gate_file: str = "-") -> str:
    words = rs.relators if isinstance(rs, RelatorSet) else rs
    body = "".join(" ".join(labels[k] for k in w) + "\n" for w in words)
    return f"# relators mined against {gate_file}\n" + body


def parse_relators(text: str, labels: Sequence[str]) -> list:
    """Read a relator file; tokens are generator labels or 1-based indices."""
    lookup = {lab: k for k, lab in enumerate(labels)}
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].split()
        if not body:
            continue
        w = []
        for tok in body:
            if tok in lookup:
                w.append(lookup[tok])
            elif tok.isdigit() and 1 <= int(tok) <= len(labels):
                w.append(int(tok) - 1)
            else:
                raise ParseError(f"unknown generator {tok!r}", lineno)
        out.append(w)
    return out

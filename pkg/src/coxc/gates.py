"""Exact semantics of reversible and quantum gates, and Coxeter matrix extraction.

Basis-state convention: line 1 is the least significant bit of the state
index, so state ``x`` has line ``l`` set iff ``(x >> (l - 1)) & 1``.

A circuit (or word) ``[g1, g2, ...]`` is read in time order: ``g1`` acts
first.  Reversible gates act on basis-state indices; quantum gates are exact
unitaries with entries ``(p + q√2 + i(r + s√2)) / 2^e``.
"""

from __future__ import annotations

import math
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence

import numpy as np

from .coxeter import INF, CoxeterMatrix
from .errors import (
    CapExceeded,
    DimensionMismatch,
    NotInvolution,
    NotReversible,
    ParseError,
    UndecidedOrder,
)

PERMUTATION_CAP = 20
UNITARY_CAP = 10
POWER_CAP = 24

# fixed-arity kinds; C/T/F take k lines and are spelled C3, T4, F4, T6 ...
ARITY = {
    "NOT": 1, "CNOT": 2, "TOF": 3, "FRED": 3, "SWAP": 2, "CNOTNOT": 3, "NOTNOT": 2,
    "X": 1, "Y": 1, "Z": 1, "H": 1, "CX": 2, "CY": 2, "CZ": 2, "CH": 2,
}
FAMILY_KINDS = ("C", "T", "F")
REVERSIBLE_KINDS = {"NOT", "CNOT", "TOF", "FRED", "SWAP", "CNOTNOT", "NOTNOT", "X", "CX", *FAMILY_KINDS}


@dataclass(frozen=True)
class Gate:
    kind: str
    lines: tuple

    def __post_init__(self):
        kind = self.kind.upper()
        lines = tuple(int(x) for x in self.lines)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "lines", lines)
        if kind in FAMILY_KINDS:
            if len(lines) < 1:
                raise ValueError(f"{kind}k gate needs at least one line")
            if kind != "C" and len(lines) % 2:
                # complementing an odd number of bits swaps parity classes
                raise ValueError(f"{kind}{len(lines)} is not a bijection; k must be even")
        elif kind in ARITY:
            if len(lines) != ARITY[kind]:
                raise ValueError(f"{kind} takes {ARITY[kind]} lines, got {len(lines)}")
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(set(lines)) != len(lines):
            raise ValueError(f"{self.name} has repeated lines {lines}")
        if min(lines) < 1:
            raise ValueError("lines are numbered from 1")

    @property
    def name(self) -> str:
        return f"{self.kind}{len(self.lines)}" if self.kind in FAMILY_KINDS else self.kind

    @property
    def label(self) -> str:
        return "_".join([self.name, *map(str, self.lines)])

    @property
    def reversible(self) -> bool:
        return self.kind in REVERSIBLE_KINDS

    @property
    def max_line(self) -> int:
        return max(self.lines)

    def relabel(self, mapping) -> Gate:
        return Gate(self.kind, tuple(mapping[x] for x in self.lines))

    def __str__(self) -> str:
        return " ".join([self.name, *map(str, self.lines)])


def gate(kind: str, *lines: int) -> Gate:
    """Shorthand: ``gate("TOF", 1, 2, 3)`` or ``gate("C3", 1, 2, 3)``."""
    m = re.fullmatch(r"([CTF])(\d+)", kind.upper())
    if m:
        if int(m.group(2)) != len(lines):
            raise ValueError(f"{kind} needs {m.group(2)} lines, got {len(lines)}")
        return Gate(m.group(1), lines)
    return Gate(kind, lines)


def parse_gate(text: str) -> Gate:
    toks = text.split()
    try:
        return gate(toks[0], *(int(t) for t in toks[1:]))
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad gate {text!r}: {exc}") from None


def parse_gate_set(text: str) -> list:
    """One gate per line (``KIND i j k ...``, 1-based lines), ``#`` starts a comment."""
    gates = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            gates.append(parse_gate(body))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return gates


def format_gate_set(gates: Iterable[Gate]) -> str:
    return "".join(f"{g}\n" for g in gates)


# -- reversible semantics -----------------------------------------------------


def _mask(lines) -> int:
    return sum(1 << (l - 1) for l in lines)


def _bit(states, line):
    return (states >> (line - 1)) & 1


def apply_gate(g: Gate, states: np.ndarray) -> np.ndarray:
    """Image of an array of basis-state indices under a reversible gate."""
    k = g.kind
    ls = g.lines
    if k in ("NOT", "X"):
        return states ^ _mask(ls)
    if k in ("CNOT", "CX"):
        return states ^ (_bit(states, ls[0]) * _mask(ls[1:]))
    if k == "TOF":
        return states ^ ((_bit(states, ls[0]) & _bit(states, ls[1])) * _mask(ls[2:]))
    if k == "FRED":
        flip = _bit(states, ls[0]) & (_bit(states, ls[1]) ^ _bit(states, ls[2]))
        return states ^ (flip * _mask(ls[1:]))
    if k == "SWAP":
        return states ^ ((_bit(states, ls[0]) ^ _bit(states, ls[1])) * _mask(ls))
    if k == "CNOTNOT":
        return states ^ (_bit(states, ls[0]) * _mask(ls[1:]))
    if k == "NOTNOT":
        return states ^ _mask(ls)
    m = _mask(ls)
    if k == "C":
        x = states & m
        return states ^ (((x == 0) | (x == m)).astype(states.dtype) * m)
    if k in ("T", "F"):
        parity = _fold(lambda acc, l: acc ^ _bit(states, l), ls, np.zeros_like(states))
        flip = parity if k == "T" else parity ^ 1
        return states ^ (flip * m)
    raise NotReversible(f"{g.name} is not a reversible gate")


def apply_circuit(gates: Sequence[Gate], states) -> np.ndarray:
    states = np.asarray(states, dtype=np.int64)
    for g in gates:
        states = apply_gate(g, states)
    return states


@dataclass(frozen=True, eq=False)
class PermutationTable:
    n_lines: int
    images: np.ndarray

    def __post_init__(self):
        imgs = np.asarray(self.images, dtype=np.int64)
        if imgs.shape != (1 << self.n_lines,):
            raise DimensionMismatch(f"expected {1 << self.n_lines} images, got {imgs.shape}")
        seen = np.zeros(imgs.size, dtype=bool)
        seen[imgs] = True
        if not seen.all():
            raise ValueError("images do not form a bijection")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> PermutationTable:
        return cls(n, np.arange(1 << n, dtype=np.int64))

    def then(self, other: PermutationTable) -> PermutationTable:
        """Apply ``self`` first, then ``other``."""
        if other.n_lines != self.n_lines:
            raise DimensionMismatch(f"{self.n_lines} vs {other.n_lines} lines")
        return PermutationTable(self.n_lines, other.images[self.images])

    def inverse(self) -> PermutationTable:
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.images.size)
        return PermutationTable(self.n_lines, inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.images.size)))

    def order(self) -> int:
        imgs = self.images
        seen = np.zeros(imgs.size, dtype=bool)
        order = 1
        moved = np.flatnonzero(imgs != np.arange(imgs.size))
        for start in moved:
            if seen[start]:
                continue
            length, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = imgs[x]
                length += 1
            order = math.lcm(order, length)
        return order

    def __eq__(self, other):
        return (
            isinstance(other, PermutationTable)
            and self.n_lines == other.n_lines
            and np.array_equal(self.images, other.images)
        )

    __hash__ = None


def _check_lines(g: Gate, n: int):
    if g.max_line > n:
        raise ValueError(f"{g} uses line {g.max_line} but the circuit has {n} lines")


def gate_permutation(g: Gate, n: int, cap: int = PERMUTATION_CAP) -> PermutationTable:
    if not g.reversible:
        raise NotReversible(f"{g.name} has no permutation semantics")
    if n > cap:
        raise CapExceeded(f"permutation tables are capped at {cap} lines (asked for {n})")
    _check_lines(g, n)
    return PermutationTable(n, apply_gate(g, np.arange(1 << n, dtype=np.int64)))


def word_permutation(gates: Sequence[Gate], n: int, cap: int = PERMUTATION_CAP) -> PermutationTable:
    if n > cap:
        raise CapExceeded(f"permutation tables are capped at {cap} lines (asked for {n})")
    for g in gates:
        if not g.reversible:
            raise NotReversible(f"{g.name} has no permutation semantics")
        _check_lines(g, n)
    return PermutationTable(n, apply_circuit(gates, np.arange(1 << n, dtype=np.int64)))


# -- exact unitaries ----------------------------------------------------------

_SAFE = 1 << 62


def _mm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return np.dot(a.astype(object), b.astype(object))
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * a.shape[1] * 8
    if bound >= _SAFE:
        return np.dot(a.astype(object), b.astype(object))
    return a @ b


class ExactUnitary:
    """Matrix ``(P + Q√2 + i(R + S√2)) / 2^e`` with integer arrays P, Q, R, S.

    The scale ``e`` is shared by the whole matrix and kept minimal.
    """

    __slots__ = ("P", "Q", "R", "S", "e")

    def __init__(self, P, Q=None, R=None, S=None, e: int = 0, *, check: bool = False):
        P = np.asarray(P)
        z = np.zeros_like(P)
        self.P = P
        self.Q = z if Q is None else np.asarray(Q)
        self.R = z if R is None else np.asarray(R)
        self.S = z if S is None else np.asarray(S)
        self.e = e
        self._normalize()
        if check and not (self @ self.dagger()).is_identity():
            raise ValueError("matrix is not unitary")

    def _normalize(self):
        parts = (self.P, self.Q, self.R, self.S)
        while self.e > 0 and all(not np.any(p % 2) for p in parts):
            parts = tuple(p // 2 for p in parts)
            self.e -= 1
        self.P, self.Q, self.R, self.S = parts

    @property
    def dim(self) -> int:
        return self.P.shape[0]

    @classmethod
    def identity(cls, dim: int) -> ExactUnitary:
        return cls(np.eye(dim, dtype=np.int64))

    def __matmul__(self, other: ExactUnitary) -> ExactUnitary:
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim}")
        P1, Q1, R1, S1 = self.P, self.Q, self.R, self.S
        P2, Q2, R2, S2 = other.P, other.Q, other.R, other.S

        def zmul(x1, y1, x2, y2):  # (x1 + y1√2)(x2 + y2√2)
            return _mm(x1, x2) + 2 * _mm(y1, y2), _mm(x1, y2) + _mm(y1, x2)

        a0, a1 = zmul(P1, Q1, P2, Q2)
        b0, b1 = zmul(R1, S1, R2, S2)
        c0, c1 = zmul(P1, Q1, R2, S2)
        d0, d1 = zmul(R1, S1, P2, Q2)
        return ExactUnitary(a0 - b0, a1 - b1, c0 + d0, c1 + d1, self.e + other.e)

    def dagger(self) -> ExactUnitary:
        return ExactUnitary(self.P.T.copy(), self.Q.T.copy(), -self.R.T, -self.S.T, self.e)

    def is_identity(self) -> bool:
        return (
            self.e == 0
            and np.array_equal(self.P, np.eye(self.dim, dtype=np.int64))
            and not np.any(self.Q)
            and not np.any(self.R)
            and not np.any(self.S)
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExactUnitary)
            and self.e == other.e
            and all(np.array_equal(a, b) for a, b in zip(self.parts, other.parts))
        )

    __hash__ = None

    @property
    def parts(self):
        return self.P, self.Q, self.R, self.S

    def entry(self, i: int, j: int) -> tuple:
        """Entry ``(i, j)`` as ``(p, q, r, s, e)`` in lowest terms."""
        vals = [int(x[i, j]) for x in self.parts]
        e = self.e
        while e > 0 and all(v % 2 == 0 for v in vals):
            vals = [v // 2 for v in vals]
            e -= 1
        return (*vals, e)

    def to_complex(self) -> np.ndarray:
        r2 = math.sqrt(2)
        f = lambda x: np.asarray(x, dtype=float)
        return ((f(self.P) + r2 * f(self.Q)) + 1j * (f(self.R) + r2 * f(self.S))) / 2.0**self.e

    def power(self, k: int) -> ExactUnitary:
        result = ExactUnitary.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def rational_matrix(self) -> np.ndarray:
        """Integer matrix of ``2^e * U`` acting on Q^(4 dim), basis (1, √2, i, i√2) per coordinate."""
        p, q, r, s = (x.astype(object) for x in self.parts)
        d = self.dim
        A = np.zeros((4 * d, 4 * d), dtype=object)
        blocks = [
            [p, 2 * q, -r, -2 * s],
            [q, p, -s, -r],
            [r, 2 * s, p, 2 * q],
            [s, r, q, p],
        ]
        for a in range(4):
            for b in range(4):
                A[a::4, b::4] = blocks[a][b]
        return A

    def __repr__(self):
        return f"ExactUnitary(dim={self.dim}, e={self.e})"


def _local(P=None, Q=None, R=None, S=None, e=0):
    arr = lambda x: None if x is None else np.array(x, dtype=np.int64)
    return ExactUnitary(arr(P), arr(Q), arr(R), arr(S), e)


_Z2 = [[0, 0], [0, 0]]
SINGLE_QUBIT = {
    "X": _local([[0, 1], [1, 0]]),
    "Y": _local(_Z2, _Z2, [[0, -1], [1, 0]]),
    "Z": _local([[1, 0], [0, -1]]),
    "H": _local(_Z2, [[1, 1], [1, -1]], e=1),
}


def _controlled(u: ExactUnitary) -> ExactUnitary:
    # local bit 0 = control, bit 1 = target
    def embed(part, diag):
        out = np.zeros((4, 4), dtype=np.int64)
        out[0, 0] = out[2, 2] = diag
        out[1::2, 1::2] = part
        return out

    scale = 1 << u.e
    return ExactUnitary(embed(u.P, scale), embed(u.Q, 0), embed(u.R, 0), embed(u.S, 0), u.e)


def _local_unitary(g: Gate) -> ExactUnitary:
    if g.kind in SINGLE_QUBIT:
        return SINGLE_QUBIT[g.kind]
    return _controlled(SINGLE_QUBIT[g.kind[1]])


def gate_unitary(g: Gate, n: int, cap: int = UNITARY_CAP) -> ExactUnitary:
    """Exact ``2^n x 2^n`` unitary; reversible gates embed as permutation matrices."""
    if n > cap:
        raise CapExceeded(f"unitaries are capped at {cap} qubits (asked for {n})")
    _check_lines(g, n)
    dim = 1 << n
    cols = np.arange(dim, dtype=np.int64)
    if g.reversible:
        P = np.zeros((dim, dim), dtype=np.int64)
        P[apply_gate(g, cols), cols] = 1
        return ExactUnitary(P)
    local = _local_unitary(g)
    k = len(g.lines)
    rest = cols & ~_mask(g.lines)
    loc = sum(_bit(cols, l) << j for j, l in enumerate(g.lines))
    parts = [np.zeros((dim, dim), dtype=np.int64) for _ in range(4)]
    for out in range(1 << k):
        rows = rest | sum(((out >> j) & 1) << (l - 1) for j, l in enumerate(g.lines))
        for full, small in zip(parts, local.parts):
            full[rows, cols] = small[out, loc]
    return ExactUnitary(*parts, local.e)


def word_unitary(gates: Sequence[Gate], n: int, cap: int = UNITARY_CAP) -> ExactUnitary:
    u = ExactUnitary.identity(1 << n)
    for g in gates:
        u = gate_unitary(g, n, cap) @ u
    return u


# -- orders -------------------------------------------------------------------


@dataclass(frozen=True)
class OrderResult:
    kind: str  # "finite" | "infinite" | "unknown"
    m: int | None = None
    cap: int | None = None

    @classmethod
    def finite(cls, m: int) -> OrderResult:
        return cls("finite", m)

    @classmethod
    def infinite(cls) -> OrderResult:
        return cls("infinite")

    @classmethod
    def unknown(cls, cap: int) -> OrderResult:
        return cls("unknown", cap=cap)

    @property
    def value(self):
        """Matrix entry: the finite order or ``INF``; None when undecided."""
        return self.m if self.kind == "finite" else INF if self.kind == "infinite" else None

    def __str__(self):
        return {"finite": f"Finite({self.m})", "infinite": "Infinite"}.get(self.kind, f"Unknown({self.cap})")


def rational_factors(u: ExactUnitary) -> list:
    """Distinct irreducible factors over Q of the minimal polynomial of ``u``.

    ``u`` is unitary, hence diagonalisable, and so are its Galois
    conjugates, so the minimal polynomial is the squarefree part of the
    characteristic polynomial of the rational representation.  Factors are
    returned as primitive integer coefficient lists, highest degree first.
    """
    from sympy import Poly, ZZ, symbols
    from sympy.polys.matrices import DomainMatrix

    x = symbols("x")
    A = u.rational_matrix()
    cp = DomainMatrix.from_list([[int(v) for v in row] for row in A], ZZ).charpoly()
    deg = len(cp) - 1
    # roots of cp are 2^e * eigenvalues; rescale y = 2^e x
    scaled = [int(c) * (1 << (u.e * (deg - k))) for k, c in enumerate(cp)]
    poly = Poly(scaled, x, domain=ZZ)
    factors = []
    for f, _mult in poly.factor_list()[1]:
        coeffs = [int(c) for c in f.primitive()[1].all_coeffs()]
        if coeffs[0] < 0:
            coeffs = [-c for c in coeffs]
        factors.append(coeffs)
    return sorted(factors, key=lambda c: (len(c), c))


def cyclotomic_index(coeffs: Sequence[int]) -> int | None:
    """``m`` if the primitive integer polynomial equals the cyclotomic ``Φ_m``, else None."""
    from sympy import Poly, cyclotomic_poly, symbols, totient

    if abs(coeffs[0]) != 1:
        return None  # roots are not algebraic integers
    x = symbols("x")
    deg = len(coeffs) - 1
    target = Poly(coeffs, x)
    # phi(m) >= sqrt(m/2), so phi(m) = deg forces m <= 2 deg^2
    for m in range(1, 2 * deg * deg + 3):
        if totient(m) == deg and Poly(cyclotomic_poly(m, x), x) == target:
            return m
    return None


def unitary_order(u: ExactUnitary, cap: int = POWER_CAP) -> OrderResult:
    p = u
    for k in range(1, cap + 1):
        if p.is_identity():
            return OrderResult.finite(k)
        p = p @ u
    orders = [cyclotomic_index(f) for f in rational_factors(u)]
    if any(m is None for m in orders):
        return OrderResult.infinite()
    m = _fold(math.lcm, orders, 1)
    if u.power(m).is_identity():
        return OrderResult.finite(m)
    return OrderResult.unknown(cap)


def product_order(a, b, cap: int = POWER_CAP) -> OrderResult:
    """Order of the product of two group elements (permutations or exact unitaries)."""
    if isinstance(a, PermutationTable) and isinstance(b, PermutationTable):
        return OrderResult.finite(a.then(b).order())
    if isinstance(a, ExactUnitary) and isinstance(b, ExactUnitary):
        return unitary_order(a @ b, cap)
    raise DimensionMismatch("cannot multiply a permutation with a unitary")


def _support_map(gates: Sequence[Gate]):
    support = sorted({l for g in gates for l in g.lines})
    return {l: k + 1 for k, l in enumerate(support)}, len(support)


def element(g: Gate, n: int, quantum: bool = False):
    return gate_unitary(g, n) if quantum or not g.reversible else gate_permutation(g, n)


def gate_pair_order(g: Gate, h: Gate, quantum: bool = False, cap: int = POWER_CAP) -> OrderResult:
    """Order of ``g h`` evaluated on the union of their supports.

    Idle lines only tensor on an identity factor, so the result is the same
    as on any larger register.
    """
    mapping, k = _support_map([g, h])
    quantum = quantum or not (g.reversible and h.reversible)
    return product_order(
        element(g.relabel(mapping), k, quantum), element(h.relabel(mapping), k, quantum), cap
    )


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("COXC_THREADS", "1")))
    except ValueError:
        return 1


def extract_coxeter_matrix(
    generators: Sequence[Gate],
    n: int,
    *,
    quantum: bool = False,
    cap: int = POWER_CAP,
    assume_infinite: bool = False,
    on_support: bool = True,
) -> CoxeterMatrix:
    """Coxeter matrix of a list of involutive gates on ``n`` lines.

    ``m_ij`` is the exact order of ``g_i g_j``.  Orders that cannot be
    certified raise :class:`UndecidedOrder` unless ``assume_infinite``.
    With ``on_support`` (the default) each pair is evaluated on the union of
    its lines; otherwise every element is built on the full ``n``-line
    register, which is subject to the permutation and unitary caps.
    """
    gens = list(generators)
    for idx, g in enumerate(gens):
        _check_lines(g, n)
        if quantum and n > UNITARY_CAP:
            raise CapExceeded(f"unitaries are capped at {UNITARY_CAP} qubits (asked for {n})")
        if not quantum and not g.reversible:
            raise NotReversible(f"{g} needs quantum semantics")
        mapping, k = _support_map([g])
        e = element(g.relabel(mapping), k, quantum)
        sq = e.then(e) if isinstance(e, PermutationTable) else e @ e
        if not sq.is_identity():
            raise NotInvolution(idx)
    r = len(gens)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]

    if on_support:
        def order(ij):
            return gate_pair_order(gens[ij[0]], gens[ij[1]], quantum, cap)
    else:
        elems = [element(g, n, quantum) for g in gens]

        def order(ij):
            return product_order(elems[ij[0]], elems[ij[1]], cap)

    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(order, pairs))
    else:
        results = [order(p) for p in pairs]
    rows = [[1] * r for _ in range(r)]
    for (i, j), res in zip(pairs, results):
        if res.kind == "unknown":
            if not assume_infinite:
                raise UndecidedOrder(i, j, cap)
            m = INF
        else:
            m = res.value
        rows[i][j] = rows[j][i] = m
    return CoxeterMatrix(tuple(map(tuple, rows)), tuple(g.label for g in gens))


def ck_adjacency_order(k: int) -> int:
    """Order of ``s_{k,k+1} C^k_{1..k}``: 6 for k >= 3, 3 for k = 2, 4 for k = 1."""
    if k < 1:
        raise ValueError("k must be positive")
    return 6 if k >= 3 else 3 if k == 2 else 4


def ck_adjacency_order_computed(k: int) -> int:
    swap = gate_permutation(Gate("SWAP", (k, k + 1)), k + 1)
    ck = gate_permutation(Gate("C", tuple(range(1, k + 1))), k + 1)
    return product_order(swap, ck).m


def is_crystallographic(matrix: CoxeterMatrix) -> bool:
    return all(m in (1, 2, 3, 4, 6, INF) for row in matrix.entries for m in row)


def all_entries_finite(matrix: CoxeterMatrix) -> bool:
    return all(m != INF for row in matrix.entries for m in row)


def linear_tail_extend(matrix: CoxeterMatrix, base_n: int, n: int) -> CoxeterMatrix:
    """Append swaps ``s_{a,a+1}`` for ``a = base_n .. n-1``.

    A new swap has order 3 with its chain neighbours and 2 with everything
    else; the existing swap ``s_{base_n-1, base_n}`` is located by label.
    """
    if n < base_n:
        raise ValueError("n must be >= base_n")
    if n == base_n:
        return matrix
    anchor = f"SWAP_{base_n - 1}_{base_n}"
    if anchor not in matrix.labels:
        raise ValueError(f"matrix has no generator labelled {anchor}")
    labels = list(matrix.labels)
    rows = [list(row) for row in matrix.entries]
    prev = labels.index(anchor)
    for a in range(base_n, n):
        for row in rows:
            row.append(2)
        new = [2] * (len(rows) + 1)
        new[-1] = 1
        rows.append(new)
        rows[prev][-1] = rows[-1][prev] = 3
        labels.append(f"SWAP_{a}_{a + 1}")
        prev = len(rows) - 1
    return CoxeterMatrix(tuple(map(tuple, rows)), tuple(labels))


# -- standard generator sets --------------------------------------------------


def reversible_generators(n: int = 7) -> list:
    """Swaps ``s_{i,i+1}`` followed by NOT, CNOT, TOF, FRED, CNOTNOT, F4, T4, T6, NOTNOT."""
    swaps = [Gate("SWAP", (i, i + 1)) for i in range(1, n)]
    return swaps + [
        Gate("NOT", (1,)),
        Gate("CNOT", (1, 2)),
        Gate("TOF", (1, 2, 3)),
        Gate("FRED", (1, 2, 3)),
        Gate("CNOTNOT", (1, 2, 3)),
        Gate("F", (1, 2, 3, 4)),
        Gate("T", (1, 2, 3, 4)),
        Gate("T", (1, 2, 3, 4, 5, 6)),
        Gate("NOTNOT", (1, 2)),
    ]


def quantum_generators(n: int = 4) -> list:
    """Swaps, then X, Y, Z, H on qubit 1, cX, cY, cZ, cH on (1, 2), TOF and FRED on 1..3."""
    swaps = [Gate("SWAP", (i, i + 1)) for i in range(1, n)]
    return swaps + [
        Gate("X", (1,)),
        Gate("Y", (1,)),
        Gate("Z", (1,)),
        Gate("H", (1,)),
        Gate("CX", (1, 2)),
        Gate("CY", (1, 2)),
        Gate("CZ", (1, 2)),
        Gate("CH", (1, 2)),
        Gate("TOF", (1, 2, 3)),
        Gate("FRED", (1, 2, 3)),
    ]

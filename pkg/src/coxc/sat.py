"""Reversible oracle circuits for 3-SAT formulas and the RevId identity check.

Line layout of a compiled formula with ``n`` variables and ``m`` clauses:

* lines ``1..n`` hold the assignment, line ``n + 1`` is the answer bit;
* clause scratch lines follow: ``n+2, n+3`` shared by every clause in serial
  mode, a fresh pair per clause in parallel mode;
* for ``m >= 2`` each clause gets its own target line, then every combiner
  step allocates ``b1, b2`` and (except the last) an intermediate target.

Numbering is ascending in that order, so compilation is deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .coxeter import reduce
from .errors import ArityError, CapExceeded, LineCollision, ParseError, UnsupportedOrder
from .gates import PERMUTATION_CAP, Gate, apply_circuit, extract_coxeter_matrix, is_crystallographic, parse_gate


@dataclass(frozen=True)
class CnfFormula:
    n_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for k, c in enumerate(clauses):
            if len(c) != 3:
                raise ArityError(f"clause {k + 1} has {len(c)} literals, expected 3")
            for lit in c:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise ValueError(f"literal {lit} out of range for {self.n_vars} variables")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, x: int) -> bool:
        """Truth value under the assignment whose bit ``v - 1`` is variable ``v``."""
        return all(
            any(((x >> (abs(l) - 1)) & 1) == (l > 0) for l in clause) for clause in self.clauses
        )

    def satisfying_mask(self) -> np.ndarray:
        xs = np.arange(1 << self.n_vars, dtype=np.int64)
        ok = np.ones(xs.size, dtype=bool)
        for clause in self.clauses:
            sat = np.zeros(xs.size, dtype=bool)
            for l in clause:
                bit = ((xs >> (abs(l) - 1)) & 1).astype(bool)
                sat |= bit if l > 0 else ~bit
            ok &= sat
        return ok

    def to_dimacs(self) -> str:
        body = "".join(" ".join(map(str, c)) + " 0\n" for c in self.clauses)
        return f"p cnf {self.n_vars} {self.m}\n{body}"


def parse_dimacs(text: str, lenient: bool = False) -> CnfFormula:
    """Parse DIMACS CNF.  Short clauses are padded by repeating the last literal when ``lenient``."""
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    start_line = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            toks = line.split()
            if header is not None or len(toks) != 4 or toks[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if start_line is None:
                start_line = lineno
            if lit == 0:
                clauses.append(_fix_arity(current, start_line, lenient))
                current, start_line = [], None
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds {header[0]} variables", lineno)
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0", start_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(map(tuple, clauses)))


def _fix_arity(lits, lineno, lenient):
    if len(lits) == 3:
        return list(lits)
    if lenient and 1 <= len(lits) < 3:
        return list(lits) + [lits[-1]] * (3 - len(lits))
    raise ArityError(f"clause has {len(lits)} literals, expected 3", lineno)


# -- circuits -----------------------------------------------------------------


@dataclass(frozen=True)
class Circuit:
    n_main: int
    target: int | None
    ancilla: tuple
    gates: tuple
    info: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "ancilla", tuple(self.ancilla))
        object.__setattr__(self, "gates", tuple(self.gates))
        main = set(range(1, self.n_main + 1))
        anc = set(self.ancilla)
        tgt = {self.target} if self.target is not None else set()
        if len(anc) != len(self.ancilla) or main & anc or main & tgt or anc & tgt:
            raise LineCollision("main, target and ancilla lines must be disjoint")
        used = main | anc | tgt
        for g in self.gates:
            stray = set(g.lines) - used
            if stray:
                raise LineCollision(f"{g} touches undeclared lines {sorted(stray)}")

    @property
    def n_lines(self) -> int:
        return max([self.n_main, self.target or 0, *self.ancilla])

    def __len__(self) -> int:
        return len(self.gates)

    def to_text(self) -> str:
        tgt = "-" if self.target is None else str(self.target)
        anc = ",".join(map(str, self.ancilla)) or "-"
        head = f"lines {self.n_lines} target {tgt} ancilla {anc}\n"
        return head + "".join(f"{g}\n" for g in self.gates)

    @classmethod
    def from_text(cls, text: str) -> Circuit:
        lines = [(k, l.split("#", 1)[0].strip()) for k, l in enumerate(text.splitlines(), 1)]
        lines = [(k, l) for k, l in lines if l]
        if not lines:
            raise ParseError("empty circuit file")
        k0, head = lines[0]
        toks = head.split()
        if len(toks) != 6 or toks[0] != "lines" or toks[2] != "target" or toks[4] != "ancilla":
            raise ParseError(f"expected 'lines N target T ancilla A1,A2,...', got {head!r}", k0)
        try:
            n_lines = int(toks[1])
            target = None if toks[3] == "-" else int(toks[3])
            ancilla = () if toks[5] == "-" else tuple(int(a) for a in toks[5].split(","))
        except ValueError:
            raise ParseError(f"bad header {head!r}", k0) from None
        n_main = n_lines - len(ancilla) - (target is not None)
        gates = []
        for k, body in lines[1:]:
            try:
                gates.append(parse_gate(body))
            except ParseError as exc:
                raise ParseError(str(exc), k) from None
        return cls(n_main, target, ancilla, tuple(gates))

    def simulate(self, states) -> np.ndarray:
        if self.n_lines > 62:
            raise CapExceeded(f"bitwise simulation is limited to 62 lines (have {self.n_lines})")
        return apply_circuit(self.gates, states)


def _swap_placement(variables: Sequence[int]):
    """Swaps moving ``variables[p]`` onto line ``p + 1``."""
    at = {}  # line -> variable currently held
    where = {}  # variable -> line
    swaps = []
    for p, v in enumerate(variables, 1):
        cur = where.get(v, v)
        if cur != p:
            held = at.get(p, p)
            swaps.append(Gate("SWAP", (min(p, cur), max(p, cur))))
            at[p], at[cur] = v, held
            where[v], where[held] = p, cur
    return swaps


def clause_circuit(clause: Sequence[int], n: int, anc: Sequence[int], target: int) -> Circuit:
    """Oracle for one clause: ``target`` flips iff the clause is satisfied.

    The core for ``x1 ∨ x2 ∨ x3`` is the 12-gate word
    ``NOT1 NOT2 NOT3 TOF(1,2,b1) TOF(3,b1,b2) NOT_a CNOT(b2,a)`` followed by
    the mirror of its first five gates.  Other clauses are conjugated by
    swaps bringing their variables to lines 1..3 (outermost) and NOTs for
    negated literals (innermost).  Repeated variables collapse: a Toffoli
    whose two controls coincide becomes a CNOT.
    """
    b1, b2 = anc
    if b1 == b2 or target in (b1, b2):
        raise LineCollision("ancilla and target lines must be distinct")
    for line in (b1, b2, target):
        if 1 <= line <= n:
            raise LineCollision(f"line {line} is a main line")
    lits = list(dict.fromkeys(int(l) for l in clause))
    if any(-l in lits for l in lits):
        gates = [Gate("NOT", (target,))]
        return Circuit(n, target, (b1, b2), gates, {"core": 1, "wrapped": 1})
    if len(lits) == 2:
        dup = next(l for l in lits if list(clause).count(l) > 1)
        slots = [dup, dup, next(l for l in lits if l != dup)]
    else:
        slots = list(clause) if len(lits) == 3 else lits * 3
    distinct = list(dict.fromkeys(abs(l) for l in slots))
    pos = {v: p for p, v in enumerate(distinct, 1)}
    q1, q2, q3 = (pos[abs(l)] for l in slots)
    if max(distinct) > n:
        raise ValueError(f"clause {tuple(clause)} mentions a variable beyond {n}")

    nots = [Gate("NOT", (p,)) for p in range(1, len(distinct) + 1)]
    first = Gate("CNOT", (q1, b1)) if q1 == q2 else Gate("TOF", (q1, q2, b1))
    second = Gate("TOF", (q3, b1, b2))
    head = nots + [first, second]
    core = head + [Gate("NOT", (target,)), Gate("CNOT", (b2, target))] + head[::-1]

    swaps = _swap_placement(distinct)
    negs = [Gate("NOT", (pos[abs(l)],)) for l in lits if l < 0]
    gates = swaps + negs + core + negs[::-1] + swaps[::-1]
    return Circuit(n, target, (b1, b2), gates, {"core": len(core), "wrapped": len(gates)})


def _combiner_gates(c1: Circuit, c2: Circuit, b1: int, b2: int):
    a1, a2 = c1.target, c2.target
    copy = [Gate("CNOT", (a1, b1)), Gate("CNOT", (a2, b2))]
    return copy + list(c1.gates) + list(c2.gates) + copy


def combine_conjunction(
    c1: Circuit, c2: Circuit, b1: int, b2: int, a3: int, clean: bool = False
) -> Circuit:
    """Oracle for the conjunction of two oracles, adding 5 gates.

    As written, ``b1`` and ``b2`` end holding the two satisfaction bits.
    ``clean`` appends the mirror of everything before the final Toffoli so
    that every ancilla returns to 0.
    """
    if c1.n_main != c2.n_main:
        raise LineCollision("sub-circuits must share their main lines")
    if c1.target == c2.target:
        raise LineCollision("sub-circuits need distinct targets")
    used = set(range(1, c1.n_main + 1)) | {c1.target, c2.target} | set(c1.ancilla) | set(c2.ancilla)
    if c1.target in c2.ancilla or c2.target in c1.ancilla:
        raise LineCollision("a sub-circuit target is the other's ancilla")
    fresh = [b1, b2, a3]
    if len(set(fresh)) != 3 or used & set(fresh):
        raise LineCollision(f"lines {fresh} must be fresh and distinct")
    body = _combiner_gates(c1, c2, b1, b2)
    tof = Gate("TOF", (b1, b2, a3))
    gates = body + [tof] + (body[::-1] if clean else [])
    ancilla = sorted(set(c1.ancilla) | set(c2.ancilla) | {c1.target, c2.target, b1, b2})
    return Circuit(c1.n_main, a3, ancilla, gates)


class Mode(str, enum.Enum):
    SERIAL = "serial"
    PARALLEL = "parallel"


def compile_formula(f: CnfFormula, mode: str = "serial", clean: bool = False) -> Circuit:
    """Oracle circuit for the whole formula: line ``n + 1`` flips iff it is satisfied.

    Clause oracles are folded left to right with :func:`combine_conjunction`.
    In clean mode the combiner steps are not mirrored one by one; the whole
    computation before the last Toffoli is mirrored once at the end.
    """
    mode = Mode(mode)
    n, m = f.n_vars, f.m
    if m < 1:
        raise ValueError("formula has no clauses")
    T = n + 1
    if mode is Mode.SERIAL:
        anc_pairs = [(n + 2, n + 3)] * m
        nxt = n + 4
    else:
        anc_pairs = [(n + 2 + 2 * j, n + 3 + 2 * j) for j in range(m)]
        nxt = n + 2 + 2 * m
    if m == 1:
        c = clause_circuit(f.clauses[0], n, anc_pairs[0], T)
        info = {"clause_lengths": [len(c)], "core_lengths": [c.info["core"]]}
        return Circuit(n, T, c.ancilla, c.gates, info)
    targets = list(range(nxt, nxt + m))
    nxt += m
    clauses = [clause_circuit(cl, n, anc_pairs[j], targets[j]) for j, cl in enumerate(f.clauses)]
    acc = clauses[0]
    for k in range(1, m):
        b1, b2 = nxt, nxt + 1
        nxt += 2
        if k == m - 1:
            a3 = T
        else:
            a3 = nxt
            nxt += 1
        acc = combine_conjunction(acc, clauses[k], b1, b2, a3)
    gates = list(acc.gates)
    if clean:
        gates = gates + gates[-2::-1]
    info = {
        "clause_lengths": [len(c) for c in clauses],
        "core_lengths": [c.info["core"] for c in clauses],
    }
    return Circuit(n, T, acc.ancilla, gates, info)


def oracle_outputs(c: Circuit, n_vars: int) -> np.ndarray:
    """Output states for every assignment with target and ancilla at 0."""
    return c.simulate(np.arange(1 << n_vars, dtype=np.int64))


# -- RevId ----------------------------------------------------------------------


class RevIdStatus(str, enum.Enum):
    IDENTITY = "identity"
    NOT_IDENTITY = "not-identity"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RevIdResult:
    status: RevIdStatus
    stage: int | None = None
    witness: int | None = None
    reduced_length: int | None = None

    def __str__(self):
        if self.status is RevIdStatus.NOT_IDENTITY:
            return f"not-identity witness {self.witness}"
        if self.status is RevIdStatus.IDENTITY:
            return f"identity (stage {self.stage})"
        return "unknown"


def revid(c: Circuit, cap_n: int = PERMUTATION_CAP) -> RevIdResult:
    """Decide whether a reversible circuit is the identity.

    Stage 1 reduces the gate word in the Coxeter group of its distinct gates;
    an empty result proves the identity.  Stage 2 simulates all ``2^n``
    inputs when ``n <= cap_n`` and reports the first moved input.
    """
    gates = list(c.gates)
    for g in gates:
        if not g.reversible:
            raise ValueError(f"{g} is not reversible")
    reduced_length = None
    distinct = list(dict.fromkeys(gates))
    if distinct:
        index = {g: k for k, g in enumerate(distinct)}
        matrix = extract_coxeter_matrix(distinct, max(g.max_line for g in distinct))
        if is_crystallographic(matrix):
            try:
                reduced = reduce(matrix, [index[g] for g in gates], width=None)
            except UnsupportedOrder:
                reduced = None
            if reduced is not None:
                if not reduced:
                    return RevIdResult(RevIdStatus.IDENTITY, 1, reduced_length=0)
                reduced_length = len(reduced)
    else:
        return RevIdResult(RevIdStatus.IDENTITY, 1, reduced_length=0)
    n = c.n_lines
    if n > cap_n:
        return RevIdResult(RevIdStatus.UNKNOWN, reduced_length=reduced_length)
    states = np.arange(1 << n, dtype=np.int64)
    moved = np.flatnonzero(apply_circuit(gates, states) != states)
    if moved.size == 0:
        return RevIdResult(RevIdStatus.IDENTITY, 2, reduced_length=reduced_length)
    return RevIdResult(RevIdStatus.NOT_IDENTITY, 2, int(moved[0]), reduced_length)

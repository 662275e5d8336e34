"""Swap-test identity testing: closed-form probabilities and a small state-vector check.

The swap tests and the combiner are never built as circuits.  Overlaps
``F_i = <0| W_i^† A_i^† B_i^{-1} W_i |0>`` are computed by state-vector
simulation, and the outcome probabilities come from their closed forms.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapExceeded
from .gates import Gate, _workers, apply_gate, gate, gate_unitary
from .sat import Circuit, CnfFormula

STATE_CAP = 10
TRUTH_TABLE_CAP = 20
TOLERANCE = 1e-9


class _Unbounded:
    def __repr__(self):
        return "UNBOUNDED"

    __str__ = __repr__


UNBOUNDED = _Unbounded()


def analytic_pi(f: CnfFormula) -> Fraction:
    """Fraction of assignments that violate ``f``."""
    if f.n_vars > TRUTH_TABLE_CAP:
        raise CapExceeded(f"truth tables are limited to {TRUTH_TABLE_CAP} variables")
    ok = int(np.count_nonzero(f.satisfying_mask()))
    return Fraction((1 << f.n_vars) - ok, 1 << f.n_vars)


def _exact(x):
    return isinstance(x, (int, Fraction))


def prob_one(F: Sequence, k: int | None = None):
    """``(1/2^k) prod (1 + |F_i|^2)``; exact when every ``|F_i|`` is rational."""
    F = list(F)
    if k is not None and k != len(F):
        raise ValueError(f"expected {k} overlaps, got {len(F)}")
    if all(_exact(x) for x in F):
        out = Fraction(1)
        for x in F:
            out *= (1 + Fraction(x) ** 2) / 2
        return out
    return float(np.prod([(1 + abs(x) ** 2) / 2 for x in F]))


def chebyshev_t(n: int, x):
    """``T_n(x)`` by the three-term recurrence."""
    a, b = 1, x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, 2 * x * b - a
    return b


def prob_amplified(p, N: int):
    """``T_{2N+1}(sqrt p)^2``.

    ``T_{2N+1}`` is odd, so it equals ``sqrt(p) * q(p)`` for a polynomial
    ``q`` and the square is ``p * q(p)^2``.  A rational ``p`` therefore gives
    an exact rational result.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    if not _exact(p):
        r = math.sqrt(min(max(float(p), 0.0), 1.0))
        return float(chebyshev_t(2 * N + 1, r) ** 2)
    p = Fraction(p)
    # track T_k(x) as a + b*x with x^2 = p
    prev, cur = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    for _ in range(2 * N):
        a, b = cur
        nxt = (2 * b * p - prev[0], 2 * a - prev[1])
        prev, cur = cur, nxt
    # odd degree, so the constant part vanishes
    return cur[1] ** 2 * p


def required_k(PI, bound=Fraction(1, 3)):
    """Smallest ``k`` with ``((1 + PI^2)/2)^k <= bound``, or ``UNBOUNDED`` when ``PI = 1``."""
    PI, bound = Fraction(PI), Fraction(bound)
    if not 0 <= PI <= 1:
        raise ValueError("PI must lie in [0, 1]")
    if bound >= 1:
        return 0
    if PI == 1 or bound <= 0:
        return UNBOUNDED
    factor = (1 + PI * PI) / 2
    k = max(0, math.floor(math.log(bound) / math.log(factor)) - 1)
    while factor**k > bound:
        k += 1
    while k > 0 and factor ** (k - 1) <= bound:
        k -= 1
    return k


# -- state vectors ----------------------------------------------------------------


def _apply(g: Gate, psi: np.ndarray, n: int, inverse: bool = False) -> np.ndarray:
    if g.reversible:
        idx = np.arange(psi.size, dtype=np.int64)
        img = apply_gate(g, idx)
        out = np.empty_like(psi)
        if inverse:
            out[idx] = psi[img]
        else:
            out[img] = psi
        return out
    support = sorted(g.lines)
    local = g.relabel({l: k + 1 for k, l in enumerate(support)})
    u = gate_unitary(local, len(support)).to_complex()
    if inverse:
        u = u.conj().T
    x = np.arange(psi.size, dtype=np.int64)
    loc = np.zeros_like(x)
    for k, l in enumerate(support):
        loc |= ((x >> (l - 1)) & 1) << k
    mask = sum(1 << (l - 1) for l in support)
    base = x & ~mask
    out = np.zeros_like(psi)
    for j in range(1 << len(support)):
        dep = sum(((j >> k) & 1) << (l - 1) for k, l in enumerate(support))
        out += u[loc, j] * psi[base | dep]
    return out


def run_word(gates: Sequence[Gate], psi: np.ndarray, n: int, inverse: bool = False) -> np.ndarray:
    """Apply a word in time order, or its inverse."""
    seq = reversed(gates) if inverse else gates
    for g in seq:
        psi = _apply(g, psi, n, inverse)
    return psi


def uniform_prep(lines: Sequence[int]) -> list:
    """Hadamard on each listed line: the uniform superposition over them."""
    return [gate("H", l) for l in lines]


@dataclass(frozen=True)
class SplitPlan:
    """``k`` splits ``C = A_i B_i`` of one word, each with a preparation word ``W_i``."""

    word: tuple
    splits: tuple
    preps: tuple

    def __post_init__(self):
        if len(self.splits) != len(self.preps):
            raise ValueError("one preparation circuit is needed per split")
        for a, b in self.splits:
            if tuple(a) + tuple(b) != tuple(self.word):
                raise ValueError("each split must concatenate back to the word")

    @property
    def k(self) -> int:
        return len(self.splits)

    @classmethod
    def halves(cls, word: Sequence[Gate], k: int, prep_lines: Sequence[int]) -> SplitPlan:
        word = tuple(word)
        half = len(word) // 2
        split = (word[:half], word[half:])
        return cls(word, (split,) * k, (tuple(uniform_prep(prep_lines)),) * k)

    @classmethod
    def oracle(cls, circuit: Circuit, k: int) -> SplitPlan:
        """``A_i = Circ_L``, ``B_i`` empty, ``W_i`` uniform on the main lines."""
        word = tuple(circuit.gates)
        prep = tuple(uniform_prep(range(1, circuit.n_main + 1)))
        return cls(word, ((word, ()),) * k, (prep,) * k)


@dataclass(frozen=True)
class OverlapReport:
    F_values: tuple
    prob_one: float
    PI: Fraction | None = None
    prob_amplified: dict | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": len(self.F_values),
                "F": list(self.F_values),
                "prob_one": self.prob_one,
                "prob_amplified": {str(n): v for n, v in (self.prob_amplified or {}).items()},
                "PI": None if self.PI is None else str(self.PI),
            }
        )


def overlap(a: Sequence[Gate], b: Sequence[Gate], w: Sequence[Gate], n: int) -> complex:
    """``<0| W^† A^† B^{-1} W |0>`` on ``n`` lines."""
    zero = np.zeros(1 << n, dtype=complex)
    zero[0] = 1
    phi = run_word(w, zero, n)
    left = run_word(a, phi, n)
    right = run_word(b, phi, n, inverse=True)
    return complex(np.vdot(left, right))


def simulate_overlaps(plan: SplitPlan, n_total: int) -> OverlapReport:
    if n_total > STATE_CAP:
        raise CapExceeded(f"state vectors are limited to {STATE_CAP} lines (asked for {n_total})")
    used = [l for g in plan.word for l in g.lines] + [l for w in plan.preps for g in w for l in g.lines]
    if used and max(used) > n_total:
        raise ValueError(f"circuit uses line {max(used)} beyond {n_total}")

    def one(i):
        a, b = plan.splits[i]
        return abs(overlap(a, b, plan.preps[i], n_total))

    workers = _workers()
    if workers > 1 and plan.k > 1:
        with ThreadPoolExecutor(workers) as pool:
            F = list(pool.map(one, range(plan.k)))
    else:
        F = [one(i) for i in range(plan.k)]
    F = [min(1.0, x) for x in F]
    return OverlapReport(tuple(F), prob_one(F))


def permutation_overlap(word: Sequence[Gate], prep_lines: Sequence[int], n: int) -> Fraction:
    """Exact ``|F|`` for a reversible word with uniform preparation on ``prep_lines``.

    Counts the inputs supported on ``prep_lines`` whose image is again
    supported there, over ``2^|prep_lines|``.
    """
    prep = sorted(prep_lines)
    k = len(prep)
    j = np.arange(1 << k, dtype=np.int64)
    x = np.zeros_like(j)
    for b, l in enumerate(prep):
        x |= ((j >> b) & 1) << (l - 1)
    y = x
    for g in word:
        y = apply_gate(g, y)
    mask = sum(1 << (l - 1) for l in prep)
    hits = int(np.count_nonzero((y & ~mask) == 0))
    return Fraction(hits, 1 << k)


def swaptest_report(f: CnfFormula, circuit: Circuit, k: int, amplify: int = 0) -> OverlapReport:
    """Overlaps of the canonical oracle split, checked against the truth-table count."""
    PI = analytic_pi(f)
    report = simulate_overlaps(SplitPlan.oracle(circuit, k), circuit.n_lines)
    for x in report.F_values:
        if abs(x - float(PI)) > TOLERANCE:
            raise AssertionError(f"simulated overlap {x} disagrees with PI = {PI}")
    p = prob_one([PI] * k)
    amp = {N: float(prob_amplified(p, N)) for N in range(amplify + 1)}
    return OverlapReport(report.F_values, report.prob_one, PI, amp)

"""Compile a small 3-SAT formula to a reversible oracle, then test and schedule it."""

import numpy as np

from coxc.sat import compile_formula, parse_dimacs, revid
from coxc.gates import extract_coxeter_matrix
from coxc.scheduler import cheeger, partition_report

formula = parse_dimacs("p cnf 4 3\n1 2 -3 0\n-1 3 4 0\n2 -4 3 0\n")
for mode in ("serial", "parallel"):
    c = compile_formula(formula, mode)
    print(f"{mode:>8}: {len(c)} gates, {len(c.ancilla)} ancilla lines, {c.n_lines} lines in all")

clean = compile_formula(formula, clean=True)
xs = np.arange(16, dtype=np.int64)
flips = (clean.simulate(xs) >> (clean.target - 1)) & 1
print("target flips on", [int(x) for x in xs[flips == 1]])
print("satisfying    ", [x for x in range(16) if formula.satisfied_by(x)])

# the circuit is the identity exactly when the formula is unsatisfiable
print("revid:", revid(clean))

# the distinct gates generate a Coxeter group; the circuit is a word in it
distinct = list(dict.fromkeys(clean.gates))
matrix = extract_coxeter_matrix(distinct, clean.n_lines)
word = [distinct.index(g) for g in clean.gates]
h, part = cheeger(matrix, "local")
print(f"{len(distinct)} distinct gates; Cheeger constant of their graph is at most {h}")
print("two-way partition:", partition_report(matrix, word))

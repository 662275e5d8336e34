"""Find relations among SWAP and the two CNOTs on two lines that the Coxeter presentation misses."""

from coxc import extract_coxeter_matrix, reduce
from coxc.coxeter import dehn_reduce, format_word
from coxc.gates import gate
from coxc.relations import close_relator_set, format_relators, mine_r3

gens = [gate("SWAP", 1, 2), gate("CNOT", 1, 2), gate("CNOT", 2, 1)]
matrix = extract_coxeter_matrix(gens, 2)
print("Coxeter matrix:", [list(r) for r in matrix.entries])

rs = mine_r3(gens, max_len=6, lines=2)
print(format_relators(rs, matrix.labels), end="")

# CNOT_12 CNOT_21 CNOT_12 is SWAP, but the Coxeter group cannot see it
word = [1, 2, 1, 0]
print("\nword:", format_word(word))
print("Coxeter reduce:", format_word(reduce(matrix, word)) or "(empty)")
closed = close_relator_set(rs, gens)
print("with relators: ", format_word(dehn_reduce(matrix, closed.relators, word)) or "(empty)")

"""Extract the Coxeter matrix of the 15 reversible generators on 7 lines and reduce a word with it."""

import random

from coxc import extract_coxeter_matrix, reduce
from coxc.coxeter import format_word
from coxc.gates import reversible_generators, word_permutation

gens = reversible_generators(7)
matrix = extract_coxeter_matrix(gens, 7)

print("generators:", " ".join(matrix.labels))
for label, row in zip(matrix.labels, matrix.entries):
    print(f"{label:>14}", " ".join(f"{m:>2}" for m in row))

# a random word collapses to a shorter word for the same permutation of 128 states
rng = random.Random(1)
word = [rng.randrange(15) for _ in range(30)]
short = reduce(matrix, word)
same = word_permutation([gens[k] for k in word], 7) == word_permutation([gens[k] for k in short], 7)
print(f"\nword    ({len(word)}): {format_word(word)}")
print(f"reduced ({len(short)}): {format_word(short)}")
print("same permutation:", same)

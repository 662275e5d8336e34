import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import CLAUSE_EDGES, CLAUSE_EXPECTED, CLAUSE_WORD, sym_eval, type_a
from coxc.coxeter import (
    INF,
    CoxeterGraph,
    CoxeterMatrix,
    Finiteness,
    abelian_generator_sets,
    apply_generator,
    bilinear_form,
    dehn_reduce,
    finite_type,
    format_word,
    intervening_neighbors,
    is_infinite_irreducible,
    is_reduced,
    parse_word,
    reduce,
    root_sign,
    simple_root,
    words_equal,
)
from coxc.errors import ArithmeticOverflow, InvalidMatrix, UnsupportedOrder
from coxc.ring import ONE, ZERO, Z23

TRIANGLE = CoxeterMatrix.from_edges(3, [(1, 2, 3), (2, 3, 3), (1, 3, 3)])
A3 = type_a(3)


def path(n, m=3, last=None):
    edges = [(i, i + 1, m) for i in range(1, n)]
    if last is not None:
        edges[-1] = (n - 1, n, last)
    return CoxeterMatrix.from_edges(n, edges)


def star(arms):
    """Tree with one centre and arms of the given lengths (all m = 3)."""
    edges, nxt = [], 2
    for length in arms:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt, 3))
            prev, nxt = nxt, nxt + 1
    return CoxeterMatrix.from_edges(nxt - 1, edges)


# -- matrices ---------------------------------------------------------------------


def test_matrix_validation():
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(((1, 3), (2, 1)))
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(((2, 3), (3, 1)))
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(((1, 1), (1, 1)))
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(((1, 3), (3, 1)), ("a", "a"))
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(())


def test_json_round_trip_encodes_infinity_as_zero():
    m = CoxeterMatrix(((1, INF, 2), (INF, 1, 4), (2, 4, 1)), ("a", "b", "c"))
    text = m.to_json()
    assert '"matrix": [[1, 0, 2], [0, 1, 4], [2, 4, 1]]' in text
    back = CoxeterMatrix.from_json(text)
    assert back == m
    assert back[0, 1] == INF


def test_json_rejects_bad_input():
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_json('{"rank": 2, "labels": ["a", "b"]}')
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix.from_json('{"rank": 2, "labels": ["a", "b"], "matrix": [[1, 3], [2, 1]]}')


def test_graph_has_no_commuting_edges():
    g = CoxeterMatrix.from_edges(4, [(1, 2, 3), (3, 4, INF)]).graph
    assert g.edges == ((0, 1, 3), (2, 3, INF))
    assert g.components() == [[0, 1], [2, 3]]
    assert g.neighbors(1) == frozenset({0})


def test_commute_excludes_self():
    assert A3.commute(0, 2)
    assert not A3.commute(0, 1)
    assert not A3.commute(1, 1)


def test_word_io():
    assert parse_word("1 2 1") == [0, 1, 0]
    m = CoxeterMatrix(((1, 3), (3, 1)), ("s", "t"))
    assert parse_word("s t 2", m) == [0, 1, 1]
    assert format_word([0, 1, 0]) == "1 2 1"
    with pytest.raises(ValueError):
        parse_word("3", m)
    with pytest.raises(ValueError):
        parse_word("u", m)


# -- geometric representation -------------------------------------------------


@pytest.mark.parametrize(
    "m, expected",
    [(2, ZERO), (3, Z23(-1)), (4, Z23(0, -1)), (6, Z23(0, 0, -1)), (INF, Z23(-2))],
)
def test_bilinear_form(m, expected):
    mat = CoxeterMatrix(((1, m), (m, 1)))
    assert bilinear_form(mat, 0, 1) == expected
    assert bilinear_form(mat, 0, 0) == Z23(2)


def test_bilinear_form_rejects_order_five():
    mat = CoxeterMatrix(((1, 5), (5, 1)))
    with pytest.raises(UnsupportedOrder):
        bilinear_form(mat, 0, 1)
    with pytest.raises(UnsupportedOrder):
        reduce(mat, [0, 1])


def test_reflections():
    a_i = simple_root(A3, 0)
    assert apply_generator(A3, 0, a_i) == [Z23(-1), ZERO, ZERO]
    # commuting: s_1(a_3) = a_3
    assert apply_generator(A3, 0, simple_root(A3, 2)) == simple_root(A3, 2)
    # m = 3: s_1(a_2) = a_1 + a_2
    assert apply_generator(A3, 0, simple_root(A3, 1)) == [ONE, ONE, ZERO]


@given(st.lists(st.integers(0, 2), max_size=15), st.integers(0, 2))
def test_reflection_is_involution(w, i):
    v = simple_root(TRIANGLE, 0)
    for s in w:
        v = apply_generator(TRIANGLE, s, v)
    assert apply_generator(TRIANGLE, i, apply_generator(TRIANGLE, i, v)) == v
    assert root_sign(v) != 0


# -- reduction ----------------------------------------------------------------------


def test_involution():
    for i in range(3):
        assert reduce(A3, [i, i]) == []


def test_single_clause_word():
    m = CoxeterMatrix.from_edges(7, CLAUSE_EDGES)
    w = [g - 1 for g in CLAUSE_WORD]
    out = reduce(m, w)
    assert len(out) == 11
    assert words_equal(m, out, [g - 1 for g in CLAUSE_EXPECTED])


def test_words_equal_examples():
    m = CoxeterMatrix(((1, 3), (3, 1)))
    assert words_equal(m, [0, 1, 0], [1, 0, 1])
    assert not words_equal(m, [0], [1])


@settings(max_examples=300)
@given(st.lists(st.integers(0, 2), max_size=20))
def test_reduce_against_symmetric_group(w):
    out = reduce(A3, w)
    assert sym_eval(out, 4) == sym_eval(w, 4)
    assert len(out) <= len(w)
    assert (len(w) - len(out)) % 2 == 0
    assert reduce(A3, out) == out


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_words_equal_matches_permutations(n):
    rng = random.Random(n)
    m = type_a(n)
    agree = equal = 0
    for _ in range(1000):
        u = [rng.randrange(n) for _ in range(rng.randint(0, 12))]
        if rng.random() < 0.5:
            v = [rng.randrange(n) for _ in range(rng.randint(0, 12))]
        else:
            # same element: insert a cancelling pair and apply a braid move if present
            v = list(u)
            k = rng.randrange(n)
            pos = rng.randint(0, len(v))
            v[pos:pos] = [k, k]
            for j in range(len(v) - 2):
                a, b, c = v[j : j + 3]
                if a == c and abs(a - b) == 1:
                    v[j : j + 3] = [b, a, b]
                    break
        same = sym_eval(u, n + 1) == sym_eval(v, n + 1)
        equal += same
        agree += words_equal(m, u, v) == same
    assert agree == 1000
    assert equal > 400


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), max_size=30))
def test_sign_coherence_affine(w):
    m = CoxeterMatrix.from_edges(4, [(1, 2, 4), (2, 3, 3), (3, 4, 4)])  # affine C3
    reduce(m, w, check_roots=True)


def test_overflow_is_reported():
    w = [0, 1, 2] * 12
    assert len(reduce(TRIANGLE, w)) == 36
    with pytest.raises(ArithmeticOverflow):
        reduce(TRIANGLE, w, width=4)


def test_is_reduced():
    assert is_reduced(A3, [0, 1, 0])
    assert not is_reduced(A3, [0, 1, 0, 1])


# -- structure ----------------------------------------------------------------------


def test_intervening_neighbors_examples():
    assert intervening_neighbors(TRIANGLE, [0, 1, 2, 0, 1, 2])
    assert is_reduced(TRIANGLE, [0, 1, 2, 0, 1, 2])
    assert not intervening_neighbors(TRIANGLE, [0, 1, 1, 2])
    assert not intervening_neighbors(CoxeterMatrix(((1,),)), [0, 0])
    assert intervening_neighbors(TRIANGLE, [0])
    assert not intervening_neighbors(TRIANGLE, [0, 1, 0])


def _intervening_word(matrix, rng, length):
    graph = matrix.graph
    w, since = [], {}
    for _ in range(length):
        allowed = [g for g in range(matrix.rank) if g not in since or graph.neighbors(g) <= since[g]]
        g = rng.choice(allowed)
        for h in since:
            since[h].add(g)
        since[g] = set()
        w.append(g)
    return w


@pytest.mark.parametrize(
    "matrix",
    [
        TRIANGLE,
        CoxeterMatrix.from_edges(4, [(1, 2, 3), (2, 3, 3), (3, 4, 3), (4, 1, 3)]),
        CoxeterMatrix.from_edges(4, [(1, 2, 4), (2, 3, 6), (3, 4, INF)]),
        CoxeterMatrix.from_edges(3, [(1, 2, INF), (2, 3, 4)]),
    ],
)
def test_intervening_neighbors_implies_reduced(matrix):
    assert is_infinite_irreducible(matrix) is Finiteness.INFINITE
    rng = random.Random(7)
    for _ in range(200):
        w = _intervening_word(matrix, rng, rng.randint(1, 30))
        assert intervening_neighbors(matrix, w)
        assert is_reduced(matrix, w)


def test_finiteness_examples():
    assert is_infinite_irreducible(A3) is Finiteness.FINITE
    assert is_infinite_irreducible(TRIANGLE) is Finiteness.INFINITE
    two_edges = CoxeterMatrix.from_edges(4, [(1, 2, 3), (3, 4, 3)])
    assert is_infinite_irreducible(two_edges) is Finiteness.DISCONNECTED


def test_a3_has_24_elements():
    seen, frontier = {()}, [()]
    while frontier:
        nxt = []
        for w in frontier:
            for g in range(3):
                red = tuple(reduce(A3, list(w) + [g]))
                if all(not words_equal(A3, red, s) for s in seen if len(s) == len(red)):
                    seen.add(red)
                    nxt.append(red)
        frontier = nxt
    assert len(seen) == 24
    assert len({sym_eval(w, 4) for w in seen}) == 24


def test_triangle_outgrows_rank_three_finite_groups():
    # the longest element of a finite rank-3 group has length at most 15 (H3)
    assert is_reduced(TRIANGLE, [0, 1, 2] * 10)


@pytest.mark.parametrize(
    "matrix, name",
    [
        (path(1), "A1"),
        (path(5), "A5"),
        (path(4, last=4), "B4"),
        (path(2, m=4), "B2"),
        (star([1, 1, 2]), "D5"),
        (star([1, 1, 1]), "D4"),
        (star([1, 2, 2]), "E6"),
        (star([1, 2, 3]), "E7"),
        (star([1, 2, 4]), "E8"),
        (CoxeterMatrix.from_edges(4, [(1, 2, 3), (2, 3, 4), (3, 4, 3)]), "F4"),
        (path(3, last=5), "H3"),
        (path(4, last=5), "H4"),
        (path(2, m=8), "I2(8)"),
        (path(2, m=6), "G2"),
    ],
)
def test_finite_catalog(matrix, name):
    assert finite_type(matrix) is not None, name
    assert is_infinite_irreducible(matrix) is Finiteness.FINITE


@pytest.mark.parametrize(
    "matrix",
    [
        TRIANGLE,
        path(2, m=INF),
        star([1, 1, 1, 1]),  # affine D4
        star([2, 2, 2]),  # affine E6
        star([1, 3, 3]),  # affine E7
        star([1, 2, 5]),  # affine E8
        CoxeterMatrix.from_edges(5, [(1, 2, 3), (2, 3, 3), (3, 4, 4), (4, 5, 3)]),  # affine F4
        path(3, m=4),  # affine C2
        path(4, last=6),
        CoxeterMatrix.from_edges(4, [(1, 2, 5), (2, 3, 3), (3, 4, 5)]),
    ],
)
def test_infinite_catalog(matrix):
    assert finite_type(matrix) is None
    assert is_infinite_irreducible(matrix) is Finiteness.INFINITE


def test_abelian_sets_small():
    assert abelian_generator_sets(A3.graph) == [frozenset({0, 2}), frozenset({1})]
    empty = CoxeterGraph(4, ())
    assert abelian_generator_sets(empty) == [frozenset(range(4))]
    assert len(abelian_generator_sets(path(10).graph, max_count=3)) == 3


def test_abelian_sets_are_maximal_and_independent(reversible_matrix):
    g = reversible_matrix.graph
    sets = abelian_generator_sets(g)
    for s in sets:
        for i in s:
            assert not (g.neighbors(i) & s)
        for v in set(range(g.n_vertices)) - s:
            assert g.neighbors(v) & s


# -- Dehn rewriting -----------------------------------------------------------------


def _closure(rel):
    out = set()
    for f in (tuple(rel), tuple(rel)[::-1]):
        for k in range(len(f)):
            out.add(f[k:] + f[:k])
    return sorted(out)


def test_dehn_without_relators_is_reduce():
    rng = random.Random(3)
    for _ in range(50):
        w = [rng.randrange(3) for _ in range(15)]
        assert dehn_reduce(TRIANGLE, [], w) == reduce(TRIANGLE, w)


def test_dehn_half_relator_rule():
    rels = _closure([0, 1, 2, 1])
    assert dehn_reduce(A3, rels, [0, 1, 2]) == [1]


def test_dehn_shortens_strictly():
    rels = _closure([0, 1, 2, 1])
    rng = random.Random(4)
    for _ in range(100):
        w = [rng.randrange(3) for _ in range(20)]
        out = dehn_reduce(TRIANGLE, rels, w)
        assert len(out) <= len(reduce(TRIANGLE, w))

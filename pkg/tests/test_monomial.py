import warnings
from collections import Counter
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bettilab.diagram import BettiDiagram, lower_degree_sequence
from bettilab.monomial import (
    MAX_GENERATORS,
    MonomialIdeal,
    betti_table,
    cycle_ideal,
    multigraded_betti,
    parse_ideal,
    random_squarefree,
    read_ideal,
)

C7 = {(0, 0): 1, (1, 2): 7, (2, 3): 7, (2, 4): 7, (3, 5): 14, (4, 6): 7, (5, 7): 1}


def hilbert_from_betti(D, n, k):
    return sum((-1) ** i * v * comb(k - j + n - 1, n - 1) for (i, j), v in D.items() if k >= j)


def standard_monomials(I, k):
    count = 0
    for combo in combinations_with_replacement(range(I.n), k):
        e = Counter(combo)
        if not any(all(e[v] >= g[v] for v in range(I.n)) for g in I.gens):
            count += 1
    return count


def test_two_variables():
    assert betti_table(MonomialIdeal([(1, 0), (0, 1)])) == BettiDiagram({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def test_x2_xy():
    D = betti_table(MonomialIdeal([(2, 0), (1, 1)]))
    assert D == BettiDiagram({(0, 0): 1, (1, 2): 2, (2, 3): 1})


def test_seven_cycle(data_dir):
    I = read_ideal(data_dir / "c7.txt")
    assert I == cycle_ideal(7)
    assert betti_table(I) == BettiDiagram(C7)
    assert betti_table(I, char_p=2) == BettiDiagram(C7)
    assert I.height() == 4


def test_euler_characteristic_per_multidegree():
    I = cycle_ideal(6)
    betti, chains = multigraded_betti(I, with_chains=True)
    for b in {b for _, b in chains}:
        lhs = sum((-1) ** i * v for (i, c), v in betti.items() if c == b)
        rhs = sum((-1) ** i * v for (i, c), v in chains.items() if c == b)
        assert lhs == rhs


def test_corpus_structure(corpus):
    for ideal, D in corpus:
        assert D[(0, 0)] == 1
        assert D.betti_number(1) == len(ideal.gens)
        lower = lower_degree_sequence(D)
        assert all(a < b for a, b in zip(lower, lower[1:]))
        assert D.pdim <= ideal.n
        if ideal.is_squarefree():
            assert all(j <= ideal.n for _, j in D.entries)


def test_corpus_hilbert_oracle(corpus):
    for ideal, D in corpus[:60]:
        for k in range(0, 6):
            assert hilbert_from_betti(D, ideal.n, k) == standard_monomials(ideal, k)


def test_corpus_characteristic_two(corpus):
    """Squarefree ideals on at most 7 variables have no 2-torsion here; a difference would be flagged."""
    diffs = [ideal for ideal, D in corpus[:80] if betti_table(ideal, char_p=2) != D]
    assert diffs == []


def test_deterministic():
    assert random_squarefree(6, 5, 11) == random_squarefree(6, 5, 11)
    assert random_squarefree(6, 5, 11, 2).degrees() == [2] * len(random_squarefree(6, 5, 11, 2))
    I = random_squarefree(5, 4, "x")
    assert betti_table(I) == betti_table(I)


def test_minimalization_warns():
    with pytest.warns(UserWarning, match="not minimal"):
        I = MonomialIdeal([(1, 0), (1, 1), (1, 0)])
    assert I.gens == ((1, 0),)


def test_too_many_generators():
    n = MAX_GENERATORS + 1
    gens = [tuple(int(k == v) for k in range(n)) for v in range(n)]
    with pytest.raises(ValueError, match="generators"):
        multigraded_betti(MonomialIdeal(gens))


def test_parser():
    I = parse_ideal("# c\nvars 3\nx1*x2  # edge\nx3^2\n\n")
    assert I.gens == ((1, 1, 0), (0, 0, 2)) and not I.is_squarefree()
    assert parse_ideal(I.to_text()) == I
    for bad in ("x1\n", "vars 2\nx1+x2\n", "vars two\n", ""):
        with pytest.raises(ValueError):
            parse_ideal(bad)


def test_invalid_ideals():
    with pytest.raises(ValueError):
        MonomialIdeal([])
    with pytest.raises(ValueError):
        MonomialIdeal([(1, 0), (1,)])
    with pytest.raises(ValueError):
        random_squarefree(3, 2, 0, degree=4)


def test_height():
    assert MonomialIdeal([(1, 1, 0), (0, 1, 1)]).height() == 1
    assert MonomialIdeal([(1, 0, 0), (0, 1, 0), (0, 0, 1)]).height() == 3
    assert MonomialIdeal([(0, 0)]).height() == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=1, max_size=5))
def test_hilbert_oracle_random(gens):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        I = MonomialIdeal([tuple(g) for g in gens], 3)
    if I.height() == 0:
        with pytest.raises(ValueError, match="unit ideal"):
            betti_table(I)
        return
    D = betti_table(I)
    for k in range(7):
        assert hilbert_from_betti(D, 3, k) == standard_monomials(I, k)

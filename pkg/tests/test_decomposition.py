from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bettilab.decomposition import (
    DecompositionTerm,
    NotDecomposableError,
    decompose,
    is_chain,
    reconstruct,
    weight_sum,
)
from bettilab.diagram import BettiDiagram, DegreeSequence, in_window, lower_degree_sequence, upper_degree_sequence

KOSZUL2 = BettiDiagram({(0, 0): 1, (1, 1): 2, (2, 2): 1})


def term(w, d):
    return DecompositionTerm(Fraction(w), DegreeSequence(d))


def test_pure_inputs():
    assert decompose(KOSZUL2, 2) == [term(1, (0, 1, 2))]
    assert decompose(BettiDiagram({(0, 0): 1, (1, 2): 3, (2, 3): 2}), 2) == [term(1, (0, 2, 3))]


def test_height_one_ideal():
    # (x^2, xy) = x(x, y): not pure, height 1
    D = BettiDiagram({(0, 0): 1, (1, 2): 2, (2, 3): 1})
    assert decompose(D, 1) == [term(Fraction(1, 2), (0, 2, 3)), term(Fraction(1, 2), (0, 2))]
    with pytest.raises(NotDecomposableError):
        decompose(D, 2)


def test_cycle7(cycle7):
    terms = decompose(cycle7, 4)
    assert reconstruct(terms) == cycle7
    assert weight_sum(terms) == 1
    assert is_chain(terms)
    assert all(len(t.dseq) - 1 >= 4 for t in terms)


def test_caviglia(caviglia):
    terms = decompose(caviglia, 2)
    assert terms == [
        term(Fraction(1, 5), (0, 2, 4, 5, 6)),
        term(Fraction(3, 10), (0, 2, 4, 5)),
        term(Fraction(1, 2), (0, 2, 4)),
    ]


def test_reconstruct_examples():
    assert reconstruct([term(1, (0, 1, 2))]) == KOSZUL2
    got = reconstruct([term(Fraction(1, 2), (0, 1, 2)), term(Fraction(1, 2), (0, 2, 3))])
    # pi(0,1,2) = (1,2,1) and pi(0,2,3) = (1,3,2)
    assert got == BettiDiagram({
        (0, 0): 1, (1, 1): 1, (1, 2): Fraction(3, 2), (2, 2): Fraction(1, 2), (2, 3): 1,
    })
    with pytest.raises(ValueError):
        reconstruct([])


def test_not_decomposable_reports_partial():
    D = BettiDiagram({(0, 0): 1, (1, 2): 1, (2, 3): 1})
    with pytest.raises(NotDecomposableError) as info:
        decompose(D, 2)
    assert info.value.partial == [term(Fraction(1, 3), (0, 2, 3))]
    assert info.value.column == 1


def test_short_term_against_codim():
    with pytest.raises(NotDecomposableError, match="shorter than codim"):
        decompose(KOSZUL2, 3)


def test_weight_must_be_positive():
    with pytest.raises(ValueError):
        term(0, (0, 1))


@st.composite
def chains(draw):
    length = draw(st.integers(1, 5))
    seq = sorted(draw(st.lists(st.integers(1, 10), min_size=length, max_size=length, unique=True)))
    seq = [0] + seq
    out = [tuple(seq)]
    for _ in range(draw(st.integers(0, 4))):
        cur = list(out[-1])
        if len(cur) > 2 and draw(st.booleans()):
            cur = cur[:-1]
        else:
            k = draw(st.integers(1, len(cur) - 1))
            cur[k] += 1
            for m in range(k + 1, len(cur)):
                cur[m] = max(cur[m], cur[m - 1] + 1)
        if tuple(cur) != out[-1]:
            out.append(tuple(cur))
    weights = draw(st.lists(st.fractions(min_value=Fraction(1, 12), max_value=3, max_denominator=12),
                            min_size=len(out), max_size=len(out)))
    return [term(w, d) for w, d in zip(weights, out)]


@settings(max_examples=150, deadline=None)
@given(chains())
def test_chain_combinations_decompose_uniquely(terms):
    assume(all(w.weight > 0 for w in terms))
    D = reconstruct(terms)
    codim = min(len(t.dseq) for t in terms) - 1
    got = decompose(D, codim)
    assert got == terms
    assert weight_sum(got) == D.betti_number(0)


def test_corpus_window_property(corpus):
    for _, D in corpus[:60]:
        terms = decompose(D, 1)
        lo, up = lower_degree_sequence(D), upper_degree_sequence(D)
        assert all(in_window(t.dseq, lo, up) for t in terms)

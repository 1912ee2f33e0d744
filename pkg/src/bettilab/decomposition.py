"""
Boij-Soderberg decomposition of Betti diagrams.

The greedy algorithm peels off multiples of the pure diagram on the top
(minimal) strand until nothing is left. For a diagram in the cone this
yields a chain of degree sequences with positive weights; any failure
means the input is not the Betti diagram of a module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import BettiDiagram, DegreeSequence, chain_le, herzog_kuhl


@dataclass(frozen=True)
class DecompositionTerm:
    weight: Fraction
    dseq: DegreeSequence

    def __post_init__(self):
        if self.weight <= 0:
            raise ValueError(f"weight must be positive, got {self.weight}")


class NotDecomposableError(ValueError):
    def __init__(self, message, partial, column):
        super().__init__(message)
        self.partial = partial
        self.column = column


def _top_strand(remaining):
    """Minimal degrees d_0 < d_1 < ... of the current diagram, from column 0."""
    seq = []
    i = 0
    while True:
        degrees = [j for (ii, j) in remaining if ii == i]
        if not degrees:
            break
        d = min(degrees)
        if seq and d <= seq[-1]:
            break
        seq.append(d)
        i += 1
    return seq


def decompose(D: BettiDiagram, codim: int) -> list:
    """Write D as sum of weight * pi(dseq), terms in extraction order."""
    if codim < 1:
        raise ValueError("codim must be at least 1")
    remaining = dict(D.items())
    terms = []
    for _ in range(len(remaining) + 1):
        if not remaining:
            break
        seq = _top_strand(remaining)
        if not seq:
            raise NotDecomposableError(
                "column 0 exhausted while entries remain", terms, 0
            )
        if len(seq) - 1 < codim:
            raise NotDecomposableError(
                f"top strand {tuple(seq)} is shorter than codim {codim}", terms, len(seq)
            )
        pure = herzog_kuhl(seq)
        c = min(remaining[(i, d)] / b for i, (d, b) in enumerate(zip(seq, pure.betti)))
        for i, (d, b) in enumerate(zip(seq, pure.betti)):
            v = remaining[(i, d)] - c * b
            if v:
                remaining[(i, d)] = v
            else:
                del remaining[(i, d)]
        terms.append(DecompositionTerm(c, pure.dseq))
    if remaining:
        raise NotDecomposableError("greedy loop did not terminate", terms, None)
    for a, b in zip(terms, terms[1:]):
        if not chain_le(a.dseq, b.dseq):
            raise NotDecomposableError(
                f"extracted sequences {a.dseq.degrees} and {b.dseq.degrees} do not form a chain",
                terms,
                None,
            )
    return terms


def reconstruct(terms) -> BettiDiagram:
    if not terms:
        raise ValueError("empty decomposition")
    entries: dict = {}
    for term in terms:
        pure = herzog_kuhl(term.dseq)
        for i, (d, b) in enumerate(zip(pure.dseq, pure.betti)):
            entries[(i, d)] = entries.get((i, d), 0) + term.weight * b
    return BettiDiagram(entries)


def weight_sum(terms) -> Fraction:
    return sum((t.weight for t in terms), Fraction(0))


def is_chain(terms) -> bool:
    """Extraction order is increasing; equal-length sequences are totally ordered."""
    seqs = [t.dseq.degrees for t in terms]
    return all(chain_le(a, b) for a, b in zip(seqs, seqs[1:]))

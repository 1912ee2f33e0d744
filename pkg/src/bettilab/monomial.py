"""
Betti numbers of monomial ideals from the Taylor complex.

For a multidegree b the strand of the Taylor complex tensored with k has
basis {T : lcm(T) = b}; the differential keeps the unit entries, i.e. the
faces T - t with the same lcm. beta_{i,b}(S/I) is the dimension of its
i-th homology. Only the distinct subset-lcms need to be visited.
"""

from __future__ import annotations

import random
import warnings
from collections import defaultdict
from itertools import combinations

from . import linalg
from .diagram import BettiDiagram
from .poly import parse_poly

MAX_GENERATORS = 20


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class MonomialIdeal:
    """Ideal generated by monomials, kept as a minimal list of exponent vectors."""

    def __init__(self, gens, n=None):
        gens = [tuple(int(e) for e in g) for g in gens]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        if n is None:
            n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise ValueError(f"exponent vectors must have length {n}")
        if any(min(g) < 0 for g in gens):
            raise ValueError("negative exponent")
        minimal = minimalize(gens)
        if len(minimal) != len(gens):
            warnings.warn(
                f"generator list was not minimal; kept {len(minimal)} of {len(gens)}", stacklevel=2
            )
        self.gens = tuple(minimal)
        self.n = n

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.n == other.n and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.n, frozenset(self.gens)))

    def __repr__(self):
        return f"MonomialIdeal({self.to_strings()}, n={self.n})"

    def degrees(self):
        return sorted(sum(g) for g in self.gens)

    def is_squarefree(self):
        return all(e <= 1 for g in self.gens for e in g)

    def is_equigenerated(self):
        return len(set(self.degrees())) == 1

    def height(self) -> int:
        """Codimension: fewest variables meeting the support of every generator."""
        supports = [frozenset(k for k, e in enumerate(g) if e) for g in self.gens]
        if any(not s for s in supports):
            return 0  # the unit ideal
        for size in range(1, self.n + 1):
            for cover in combinations(range(self.n), size):
                c = set(cover)
                if all(s & c for s in supports):
                    return size
        raise AssertionError("unreachable")

    def to_strings(self):
        out = []
        for g in self.gens:
            factors = [f"x{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(g) if e]
            out.append("*".join(factors) or "1")
        return out

    def to_text(self) -> str:
        return "\n".join([f"vars {self.n}", *self.to_strings()]) + "\n"


def minimalize(gens):
    """Drop duplicates and generators divisible by another one; order preserved."""
    uniq = list(dict.fromkeys(gens))
    return [g for g in uniq if not any(h != g and _divides(h, g) for h in uniq)]


def parse_ideal(text: str) -> MonomialIdeal:
    """``vars n`` header then one monomial per line; ``#`` starts a comment."""
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "vars" or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected header 'vars n'")
            n = int(parts[1])
            continue
        p = parse_poly(line, n)
        if not p.is_monomial():
            raise ValueError(f"line {lineno}: {line!r} is not a monomial")
        gens.append(next(iter(p.terms)))
    if n is None:
        raise ValueError("missing 'vars n' header")
    return MonomialIdeal(gens, n)


def read_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def _lcm_table(gens):
    """lcm of every subset, indexed by bitmask."""
    r = len(gens)
    n = len(gens[0])
    table = [(0,) * n] * (1 << r)
    for mask in range(1, 1 << r):
        low = mask & -mask
        k = low.bit_length() - 1
        rest = table[mask ^ low]
        table[mask] = tuple(max(a, b) for a, b in zip(rest, gens[k]))
    return table


def multigraded_betti(I: MonomialIdeal, char_p: int = 0, with_chains: bool = False):
    """{(i, b): beta_{i,b}} over Q (char_p = 0) or F_p.

    With ``with_chains`` also returns {(i, b): dim of the strand chain group},
    whose alternating sums agree with those of the Betti numbers.
    """
    r = len(I.gens)
    if r > MAX_GENERATORS:
        raise ValueError(f"{r} generators: Taylor strands need r <= {MAX_GENERATORS}")
    modulus = char_p or None
    table = _lcm_table(list(I.gens))
    strands = defaultdict(lambda: defaultdict(list))
    for mask, b in enumerate(table):
        strands[b][bin(mask).count("1")].append(mask)
    betti, chains = {}, {}
    for b, by_size in strands.items():
        index = {size: {m: k for k, m in enumerate(masks)} for size, masks in by_size.items()}
        ranks = {}
        for size, masks in by_size.items():
            if size == 0 or size - 1 not in index:
                ranks[size] = 0
                continue
            target = index[size - 1]
            rows = []
            for m in masks:
                row = {}
                pos = 0
                bits = m
                while bits:
                    low = bits & -bits
                    face = m ^ low
                    if face in target:
                        row[target[face]] = -1 if pos % 2 else 1
                    pos += 1
                    bits ^= low
                rows.append(row)
            ranks[size] = linalg.rank(rows, modulus)
        for size, masks in by_size.items():
            h = len(masks) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            chains[(size, b)] = len(masks)
            if h:
                betti[(size, b)] = h
    if with_chains:
        return betti, chains
    return betti


def betti_table(I: MonomialIdeal, char_p: int = 0) -> BettiDiagram:
    """Graded Betti diagram of S/I (total degrees), beta_{0,0} = 1."""
    if any(not any(g) for g in I.gens):
        raise ValueError("unit ideal: S/I = 0 has no Betti diagram")
    coarse = defaultdict(int)
    for (i, b), v in multigraded_betti(I, char_p).items():
        coarse[(i, sum(b))] += v
    return BettiDiagram(coarse)


def random_squarefree(n: int, r: int, seed, degree=None) -> MonomialIdeal:
    """Deterministic pseudo-random minimal squarefree ideal with at most r generators.

    Supports have size ``degree`` if given, else uniform in 2..min(n, 4).
    Fewer than r generators are returned when not enough fit.
    """
    if not 1 <= n <= 10 or not 1 <= r <= 10:
        raise ValueError("need 1 <= n <= 10 and 1 <= r <= 10")
    rng = random.Random(f"squarefree:{n}:{r}:{seed}:{degree}")
    lo, hi = (degree, degree) if degree is not None else (min(2, n), min(n, 4))
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"degree {degree} impossible with {n} variables")
    chosen = []
    for _ in range(50 * r):
        if len(chosen) == r:
            break
        support = frozenset(rng.sample(range(n), rng.randint(lo, hi)))
        if any(s <= support or support <= s for s in chosen):
            continue
        chosen.append(support)
    gens = [tuple(1 if k in s else 0 for k in range(n)) for s in chosen]
    return MonomialIdeal(gens, n)


def edge_ideal(edges, n) -> MonomialIdeal:
    """x_a x_b for each edge (a, b), vertices numbered from 1."""
    gens = []
    for a, b in edges:
        g = [0] * n
        g[a - 1] = g[b - 1] = 1
        gens.append(tuple(g))
    return MonomialIdeal(gens, n)


def cycle_ideal(n) -> MonomialIdeal:
    return edge_ideal([(k, k % n + 1) for k in range(1, n + 1)], n)

"""
Betti diagrams, degree sequences and pure (Herzog-Kuhl) diagrams.

Diagrams are stored sparsely keyed by (homological index i, internal
degree j). The display convention, with rows j - i, is only used for
rendering and file conversion. Every input diagram is taken to be the
diagram of a *minimal* resolution, so the extremal degrees of column i are
the extremal degrees of Tor_i.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

LESS_EQUAL = "less_equal"
GREATER_EQUAL = "greater_equal"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


class DiagramError(ValueError):
    """Raised for malformed Betti diagrams."""


class DegreeSequenceWarning(UserWarning):
    """Lower degree sequence is not strictly increasing (not a minimal resolution)."""


class BettiDiagram:
    """Immutable sparse Betti diagram with exact rational multiplicities."""

    __slots__ = ("_entries", "_pdim")

    def __init__(self, entries: Mapping[tuple[int, int], object]):
        clean = {}
        for (i, j), v in entries.items():
            i, j = int(i), int(j)
            v = Fraction(v)
            if v < 0:
                raise DiagramError(f"negative multiplicity {v} at ({i}, {j})")
            if i < 0:
                raise DiagramError(f"negative homological index at ({i}, {j})")
            if v:
                clean[(i, j)] = clean.get((i, j), 0) + v
        if not clean:
            raise DiagramError("empty diagram")
        cols = {i for i, _ in clean}
        if 0 not in cols:
            raise DiagramError("diagram has no entry in column 0")
        pdim = max(cols)
        gaps = sorted(set(range(pdim + 1)) - cols)
        if gaps:
            raise DiagramError(f"empty column(s) {gaps} inside 0..{pdim}")
        self._entries = dict(sorted(clean.items()))
        self._pdim = pdim

    @classmethod
    def from_rows(cls, rows):
        """Build from the display convention: rows[r][i] is beta_{i, i+r}.

        ``rows`` is a mapping or list of rows; each row is a mapping or list
        indexed by column, with None / 0 for empty cells.
        """
        entries = {}
        row_items = rows.items() if isinstance(rows, Mapping) else enumerate(rows)
        for r, row in row_items:
            cells = row.items() if isinstance(row, Mapping) else enumerate(row)
            for i, v in cells:
                if v:
                    entries[(i, i + r)] = v
        return cls(entries)

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    @property
    def pdim(self) -> int:
        return self._pdim

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self._entries.values())

    def items(self):
        return self._entries.items()

    def __getitem__(self, key) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def column(self, i: int) -> dict:
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    def betti_numbers(self) -> tuple:
        """Total Betti numbers (beta_0, ..., beta_p)."""
        return tuple(sum(self.column(i).values()) for i in range(self._pdim + 1))

    def betti_number(self, i: int) -> Fraction:
        return sum(self.column(i).values(), Fraction(0))

    def rows(self) -> dict:
        """Display convention: {row r: {column i: beta_{i, i+r}}}."""
        out: dict = {}
        for (i, j), v in self._entries.items():
            out.setdefault(j - i, {})[i] = v
        return dict(sorted(out.items()))

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self._entries.items())
        return f"BettiDiagram({{{body}}})"

    def __str__(self):
        return format_table(self)


def format_table(D: BettiDiagram) -> str:
    """Render in the usual display convention (rows j - i, dashes for zero)."""
    rows = D.rows()
    header = ["", *[str(i) for i in range(D.pdim + 1)]]
    lines = [header]
    for r in range(min(rows), max(rows) + 1):
        row = rows.get(r, {})
        lines.append([str(r), *[str(row[i]) if i in row else "-" for i in range(D.pdim + 1)]])
    widths = [max(len(line[k]) for line in lines) for k in range(len(header))]
    out = []
    for n, line in enumerate(lines):
        cells = [line[0].rjust(widths[0])] + [c.rjust(w) for c, w in zip(line[1:], widths[1:])]
        out.append(cells[0] + " | " + " ".join(cells[1:]))
        if n == 0:
            out.append("-" * len(out[0]))
    return "\n".join(out)


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if not degrees:
            raise ValueError("empty degree sequence")
        for a, b in zip(degrees, degrees[1:]):
            if a >= b:
                raise ValueError(f"degree sequence {degrees} is not strictly increasing")

    def __len__(self):
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, k):
        return self.degrees[k]

    @property
    def length(self) -> int:
        """Index t of the last entry: (d_0, ..., d_t) has length t."""
        return len(self.degrees) - 1

    def truncate(self, t: int) -> "DegreeSequence":
        if t > self.length:
            raise ValueError(f"cannot truncate length {self.length} to {t}")
        return DegreeSequence(self.degrees[: t + 1])


def as_dseq(d) -> DegreeSequence:
    return d if isinstance(d, DegreeSequence) else DegreeSequence(tuple(d))


@dataclass(frozen=True)
class PureDiagram:
    dseq: DegreeSequence
    betti: tuple

    def to_diagram(self) -> BettiDiagram:
        return BettiDiagram({(i, d): b for i, (d, b) in enumerate(zip(self.dseq, self.betti))})

    def exactness_defects(self) -> tuple:
        """sum_i (-1)^i beta_i d_i^k for k = 0..t-1; all zero for a pure diagram."""
        t = self.dseq.length
        return tuple(
            sum((-1) ** i * b * Fraction(d) ** k for i, (d, b) in enumerate(zip(self.dseq, self.betti)))
            for k in range(t)
        )


def upper_degree_sequence(D: BettiDiagram) -> tuple:
    return tuple(max(D.column(i)) for i in range(D.pdim + 1))


def lower_degree_sequence(D: BettiDiagram) -> tuple:
    seq = tuple(min(D.column(i)) for i in range(D.pdim + 1))
    if any(a >= b for a, b in zip(seq, seq[1:])):
        warnings.warn(
            f"lower degree sequence {seq} is not strictly increasing; "
            "this cannot be the diagram of a minimal resolution",
            DegreeSequenceWarning,
            stacklevel=2,
        )
    return seq


def regularity(D: BettiDiagram, n: Optional[int] = None) -> int:
    """max over i <= n (all i by default) of t_i - i."""
    if n is not None and n > D.pdim:
        raise ValueError(f"cap index {n} exceeds pdim {D.pdim}")
    top = upper_degree_sequence(D)
    last = D.pdim if n is None else n
    return max(t - i for i, t in enumerate(top[: last + 1]))


@dataclass(frozen=True)
class MonotonicityReport:
    lower_strict: bool
    upper_strict: bool
    first_violation: Optional[tuple]  # (which, i, (value_{i-1}, value_i))


def _first_drop(seq):
    for i in range(1, len(seq)):
        if seq[i - 1] >= seq[i]:
            return i, (seq[i - 1], seq[i])
    return None


def check_monotonicity(D: BettiDiagram) -> MonotonicityReport:
    lower = tuple(min(D.column(i)) for i in range(D.pdim + 1))
    upper = upper_degree_sequence(D)
    lo, up = _first_drop(lower), _first_drop(upper)
    violation = None
    if lo is not None:
        violation = ("lower", *lo)
    elif up is not None:
        violation = ("upper", *up)
    return MonotonicityReport(lo is None, up is None, violation)


def herzog_kuhl(dseq) -> PureDiagram:
    """Pure diagram pi(d) normalized to beta_0 = 1.

    beta_i = prod_{1 <= j <= t, j != i} |d_j - d_0| / |d_j - d_i|.
    """
    dseq = as_dseq(dseq)
    if len(dseq) < 2:
        raise ValueError("degree sequence must have at least two entries")
    d = dseq.degrees
    t = len(d) - 1
    betti = []
    for i in range(t + 1):
        b = Fraction(1)
        for j in range(1, t + 1):
            if j != i:
                b *= Fraction(abs(d[j] - d[0]), abs(d[j] - d[i]))
        betti.append(b)
    return PureDiagram(dseq, tuple(betti))


def n_dq_satisfied(D: BettiDiagram, d: int, q: int) -> bool:
    """Condition N_{d,q}: t_i = d + i - 1 for 1 <= i <= q."""
    if q < 1:
        raise ValueError("q must be at least 1")
    top = upper_degree_sequence(D)
    if q > D.pdim:
        warnings.warn(f"q = {q} exceeds pdim {D.pdim}; only existing columns checked", stacklevel=2)
    return all(top[i] == d + i - 1 for i in range(1, min(q, D.pdim) + 1))


def linear_strand_length(D: BettiDiagram, d: int) -> int:
    """Largest q with N_{d,q} (0 if column 1 is not concentrated at degree d)."""
    top = upper_degree_sequence(D)
    q = 0
    while q + 1 <= D.pdim and top[q + 1] == d + q:
        q += 1
    return q


def compare_dseq(a, b) -> str:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}; truncate first")
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return EQUAL
    if le:
        return LESS_EQUAL
    if ge:
        return GREATER_EQUAL
    return INCOMPARABLE


def chain_le(a, b) -> bool:
    """Order on degree sequences of possibly different lengths.

    a <= b when a is at least as long as b and a_i <= b_i on b's indices.
    This is the order along which Boij-Soderberg chains run.
    """
    a, b = tuple(a), tuple(b)
    return len(a) >= len(b) and all(x <= y for x, y in zip(a, b))


def in_window(dseq, lower, upper) -> bool:
    """d lies in D(tau_t(lower), tau_t(upper)) with t the length of d."""
    dseq = tuple(dseq)
    n = len(dseq)
    return all(lo <= x <= up for x, lo, up in zip(dseq, lower[:n], upper[:n])) and n <= len(lower)

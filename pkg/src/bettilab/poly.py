"""
Sparse multivariate polynomials with exact coefficients.

A polynomial is a map from exponent vectors to coefficients. Coefficients
are Fractions, or ints mod p when ``modulus`` is set. Text syntax follows
``3*x1^2*x3 - 2*x4``; variables are ``x1..xn``.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg

DEFAULT_PRIME = 2**31 - 1


class MultiPoly:
    __slots__ = ("n", "modulus", "_terms")

    def __init__(self, terms=None, n=None, modulus=None):
        terms = dict(terms or {})
        if n is None:
            if not terms:
                raise ValueError("variable count required for the zero polynomial")
            n = len(next(iter(terms)))
        self.n = n
        self.modulus = modulus
        clean = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for n={n}")
            if modulus is None:
                c = Fraction(c)
            else:
                c = linalg._normalize(c, modulus)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        if modulus is not None:
            clean = {e: c % modulus for e, c in clean.items()}
        self._terms = {e: c for e, c in clean.items() if c}

    # construction helpers

    @classmethod
    def zero(cls, n, modulus=None):
        return cls({}, n, modulus)

    @classmethod
    def constant(cls, c, n, modulus=None):
        return cls({(0,) * n: c}, n, modulus)

    @classmethod
    def var(cls, k, n, modulus=None):
        exp = [0] * n
        exp[k] = 1
        return cls({tuple(exp): 1}, n, modulus)

    @classmethod
    def monomial(cls, exp, coeff=1, modulus=None):
        return cls({tuple(exp): coeff}, len(exp), modulus)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self):
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self._terms}) <= 1

    def is_monomial(self):
        return len(self._terms) == 1

    def leading(self):
        """Largest term in lex order, as (exponent, coefficient)."""
        return max(self._terms.items())

    # arithmetic

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        if self.modulus != other.modulus:
            raise ValueError("coefficient field mismatch")

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.n, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms, self.n, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()}, self.n, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms, self.n, self.modulus)

    def __rmul__(self, other):
        return self * other

    def scale(self, c):
        return MultiPoly({e: v * c for e, v in self._terms.items()}, self.n, self.modulus)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.constant(1, self.n, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self, k):
        terms = {}
        for e, c in self._terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                terms[tuple(ne)] = c * e[k]
        return MultiPoly(terms, self.n, self.modulus)

    def evaluate(self, point, p=None):
        """Substitute a point. With ``p`` the result is an int mod p."""
        if len(point) != self.n:
            raise ValueError("point has wrong dimension")
        p = p if p is not None else self.modulus
        total = 0 if p is not None else Fraction(0)
        for e, c in self._terms.items():
            if p is not None:
                term = linalg._normalize(c, p)
                for v, k in zip(point, e):
                    if k:
                        term = term * pow(v, k, p) % p
            else:
                term = c
                for v, k in zip(point, e):
                    if k:
                        term *= Fraction(v) ** k
            total += term
        return total % p if p is not None else total

    def reduce_mod(self, p):
        return MultiPoly(self._terms, self.n, p)

    def ratio_to(self, other):
        """Return c with self == c * other, or None if not a scalar multiple."""
        self._check(other)
        if set(self._terms) != set(other._terms) or not self._terms:
            return None
        e0 = next(iter(self._terms))
        if self.modulus is None:
            c = self._terms[e0] / other._terms[e0]
        else:
            c = self._terms[e0] * pow(other._terms[e0], -1, self.modulus) % self.modulus
        return c if other.scale(c) == self else None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.n, self.modulus)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.n, self.modulus, self._terms) == (other.n, other.modulus, other._terms)

    def __hash__(self):
        return hash((self.n, self.modulus, frozenset(self._terms.items())))

    def to_string(self, names=None):
        names = names or [f"x{k + 1}" for k in range(self.n)]
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            sign = "-" if c < 0 and self.modulus is None else "+"
            mag = abs(c) if self.modulus is None else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r}, n={self.n})"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^([A-Za-z_]\w*)(?:\^(\d+))?$")
_NUMBER_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_poly(text, n, names=None, modulus=None):
    """Parse ``3*x1^2*x3 - 2*x4`` style text into a MultiPoly on n variables."""
    names = names or [f"x{k + 1}" for k in range(n)]
    index = {name: k for k, name in enumerate(names)}
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty polynomial")
    if src == "0":
        return MultiPoly.zero(n, modulus)
    pos = 0
    terms = {}
    for m in _TERM_RE.finditer(src):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial: {text!r}")
        pos = m.end()
        sign, body = m.groups()
        coeff = Fraction(-1 if sign == "-" else 1)
        exp = [0] * n
        for factor in body.split("*"):
            if _NUMBER_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm or fm.group(1) not in index:
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            exp[index[fm.group(1)]] += int(fm.group(2) or 1)
        exp = tuple(exp)
        terms[exp] = terms.get(exp, 0) + coeff
    if pos != len(src):
        raise ValueError(f"cannot parse polynomial: {text!r}")
    return MultiPoly(terms, n, modulus)


@lru_cache(maxsize=None)
def monomials_of_degree(n, deg):
    """All exponent vectors of total degree ``deg`` in n variables."""
    if deg < 0:
        return ()
    out = []
    for cuts in itertools.combinations(range(deg + n - 1), n - 1):
        prev = -1
        exp = []
        for c in cuts + (deg + n - 1,):
            exp.append(c - prev - 1)
            prev = c
        out.append(tuple(exp))
    assert len(out) == comb(deg + n - 1, n - 1)
    return tuple(sorted(out, reverse=True))


def graded_membership(h, gens):
    """Decide h in (gens) for homogeneous input, by a linear solve in degree deg h.

    Returns a list of cofactors q_i with h == sum q_i * g_i, or None when h is
    not in the ideal.
    """
    for g in [h] + list(gens):
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous polynomial {g}")
    n, modulus = h.n, h.modulus
    if h.is_zero():
        return [MultiPoly.zero(n, modulus) for _ in gens]
    D = h.degree()
    columns = []
    labels = []
    for gi, g in enumerate(gens):
        if g.is_zero() or g.degree() > D:
            continue
        for mono in monomials_of_degree(n, D - g.degree()):
            prod = g * MultiPoly.monomial(mono, modulus=modulus)
            columns.append(prod.terms)
            labels.append((gi, mono))
    coeffs = linalg.solve(columns, h.terms, modulus)
    if coeffs is None:
        return None
    cof = [dict() for _ in gens]
    for (gi, mono), c in zip(labels, coeffs):
        if c:
            cof[gi][mono] = c
    return [MultiPoly(c, n, modulus) for c in cof]


class PolyMatrix:
    """A rows x cols matrix of MultiPoly entries.

    ``row_degrees`` / ``col_degrees`` optionally record the twists of target
    and source free modules, so entry (r, c) should be homogeneous of degree
    col_degrees[c] - row_degrees[r].
    """

    def __init__(self, entries, row_degrees=None, col_degrees=None):
        self.entries = [list(row) for row in entries]
        if not self.entries or not self.entries[0]:
            raise ValueError("empty matrix")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("ragged matrix")
        self.n = self.entries[0][0].n
        self.modulus = self.entries[0][0].modulus
        self.row_degrees = list(row_degrees) if row_degrees is not None else None
        self.col_degrees = list(col_degrees) if col_degrees is not None else None
        if self.row_degrees is not None and len(self.row_degrees) != self.rows:
            raise ValueError("row degree metadata does not match row count")
        if self.col_degrees is not None and len(self.col_degrees) != self.cols:
            raise ValueError("column degree metadata does not match column count")

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def copy(self):
        return PolyMatrix(self.entries, self.row_degrees, self.col_degrees)

    def transpose(self):
        return PolyMatrix(
            [list(col) for col in zip(*self.entries)], self.col_degrees, self.row_degrees
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = MultiPoly.zero(self.n, self.modulus)
        out = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a, b = self.entries[r][k], other.entries[k][c]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.row_degrees, other.col_degrees)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def is_alternating(self):
        if self.rows != self.cols:
            return False
        for r in range(self.rows):
            if self.entries[r][r]:
                return False
            for c in range(r + 1, self.cols):
                if self.entries[r][c] != -self.entries[c][r]:
                    return False
        return True

    def is_graded(self):
        """Check every nonzero entry has the degree the twists dictate."""
        if self.row_degrees is None or self.col_degrees is None:
            raise ValueError("no degree metadata")
        for r, row in enumerate(self.entries):
            for c, e in enumerate(row):
                if e and not (
                    e.is_homogeneous() and e.degree() == self.col_degrees[c] - self.row_degrees[r]
                ):
                    return False
        return True

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.entries[r][c] for c in cols] for r in rows])

    def evaluate(self, point, p):
        return [[e.evaluate(point, p) for e in row] for row in self.entries]

    def minors(self, k):
        """Yield (row_indices, col_indices, determinant) for every k x k minor."""
        for rows in itertools.combinations(range(self.rows), k):
            for cols in itertools.combinations(range(self.cols), k):
                yield rows, cols, det(self.submatrix(rows, cols))

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def det(M):
    """Determinant by cofactor expansion with memoization over column sets."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    size = M.rows
    zero = MultiPoly.zero(M.n, M.modulus)
    memo = {}

    def expand(r, cols):
        if r == size:
            return MultiPoly.constant(1, M.n, M.modulus)
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = zero
        for pos, c in enumerate(cols):
            a = M.entries[r][c]
            if not a:
                continue
            sub = expand(r + 1, cols[:pos] + cols[pos + 1:])
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return expand(0, tuple(range(size)))


def pfaffian(A):
    """Pfaffian of an alternating matrix, by expansion along the first row."""
    if not A.is_alternating():
        raise ValueError("matrix is not alternating")
    zero = MultiPoly.zero(A.n, A.modulus)

    def pf(idx):
        if not idx:
            return MultiPoly.constant(1, A.n, A.modulus)
        if len(idx) % 2:
            return zero
        first, rest = idx[0], idx[1:]
        acc = zero
        for pos, j in enumerate(rest):
            a = A.entries[first][j]
            if not a:
                continue
            term = a * pf(rest[:pos] + rest[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        return acc

    return pf(tuple(range(A.rows)))


def pfaffians_max(A):
    """The five 4x4 Pfaffians of a 5x5 alternating matrix.

    Entry k is the Pfaffian of A with row and column k removed.
    """
    if A.shape != (5, 5):
        raise ValueError("expected a 5x5 matrix")
    if not A.is_alternating():
        raise ValueError("matrix is not alternating")
    out = []
    for k in range(5):
        keep = [i for i in range(5) if i != k]
        out.append(pfaffian(A.submatrix(keep, keep)))
    return out


def _rank_mod_p(rows, p):
    return linalg.rank([dict((c, v) for c, v in enumerate(row) if v) for row in rows], p)


def rank_random(M, p=DEFAULT_PRIME, trials=5, seed=0):
    """Rank of M at random points of F_p^n, maximized over trials.

    A lower bound on the generic rank that is sharp with high probability.
    Each trial uses its own generator derived from (seed, trial), so the
    result does not depend on the order trials are evaluated.
    """
    best = 0
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        point = [rng.randrange(p) for _ in range(M.n)]
        best = max(best, _rank_mod_p(M.evaluate(point, p), p))
    return best

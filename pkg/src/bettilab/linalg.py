"""
Exact Gaussian elimination over Q (Fractions) or a prime field F_p.

Rows are sparse: dicts mapping column index -> nonzero value. Over F_p the
values are plain ints reduced mod p.
"""

from fractions import Fraction


def _normalize(value, modulus):
    if modulus is None:
        return Fraction(value)
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, modulus) % modulus
    return value % modulus


def _inverse(value, modulus):
    if modulus is None:
        return 1 / value
    return pow(value, -1, modulus)


def sparse_rows(matrix, modulus=None):
    """Convert a dense list-of-lists into normalized sparse rows."""
    rows = []
    for row in matrix:
        srow = {}
        for c, v in enumerate(row):
            v = _normalize(v, modulus)
            if v:
                srow[c] = v
        rows.append(srow)
    return rows


def echelon(rows, modulus=None):
    """Reduce sparse rows to echelon form.

    Returns a list of (pivot_column, row) with each row scaled so that the
    pivot entry is 1. The input rows are not modified.
    """
    pivots = {}  # pivot column -> reduced row
    for row in rows:
        row = {c: _normalize(v, modulus) for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                inv = _inverse(row[col], modulus)
                if modulus is None:
                    row = {c: v * inv for c, v in row.items()}
                else:
                    row = {c: v * inv % modulus for c, v in row.items()}
                pivots[col] = row
                break
            factor = row[col]
            for c, v in pivots[col].items():
                nv = row.get(c, 0) - factor * v
                if modulus is not None:
                    nv %= modulus
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return sorted(pivots.items())


def rank(rows, modulus=None):
    """Rank of a matrix given as sparse rows (dicts) or dense lists."""
    if rows and not isinstance(rows[0], dict):
        rows = sparse_rows(rows, modulus)
    return len(echelon(rows, modulus))


def solve(columns, target, modulus=None):
    """Find coefficients c with sum_k c[k] * columns[k] == target.

    ``columns`` and ``target`` are sparse vectors (dicts keyed by arbitrary
    hashable row labels). Returns a list of coefficients, or None when the
    system is inconsistent. Free variables are set to zero.
    """
    labels = {}
    for vec in list(columns) + [target]:
        for key in vec:
            labels.setdefault(key, len(labels))
    ncols = len(columns)
    # one equation per row label; unknowns 0..ncols-1, augmented column ncols
    eqs = [dict() for _ in labels]
    for k, vec in enumerate(columns):
        for key, v in vec.items():
            eqs[labels[key]][k] = v
    for key, v in target.items():
        eqs[labels[key]][ncols] = v
    reduced = echelon(eqs, modulus)
    solution = [Fraction(0) if modulus is None else 0] * ncols
    for col, row in reversed(reduced):
        if col == ncols:
            return None
        acc = row.get(ncols, 0)
        for c, v in row.items():
            if c != col and c != ncols:
                acc -= v * solution[c]
        solution[col] = acc % modulus if modulus is not None else acc
    return solution

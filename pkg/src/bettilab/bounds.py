"""
Closed-form bounds on degrees and Betti numbers of equigenerated ideals.

Every function returns BoundReport objects with exact lhs/rhs so the
comparison can be audited. Height (codim) is always an explicit input: it
cannot be recovered from a Betti diagram in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .diagram import (
    BettiDiagram,
    linear_strand_length,
    lower_degree_sequence,
    regularity,
    upper_degree_sequence,
)
from .reports import BoundReport


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def _check_equigenerated(D: BettiDiagram, d: int):
    if D.pdim < 1 or set(D.column(1)) != {d}:
        raise ValueError(f"column 1 is not concentrated in degree {d}: {D.column(1)}")


def _check_codim(D: BettiDiagram, codim: int):
    if codim < 2:
        raise ValueError("these bounds need codim >= 2")
    if codim > D.pdim:
        raise ValueError(f"codim {codim} exceeds pdim {D.pdim}")


def mu_bounds(D: BettiDiagram, d: int, codim: int):
    """Lower and upper bound for the number of generators beta_1.

    lower = prod_{j=2..c} dbar_j / (dbar_j - d),  upper = C(d+p-1, p-1).
    """
    _check_equigenerated(D, d)
    _check_codim(D, codim)
    top = upper_degree_sequence(D)
    if any(top[j] <= d for j in range(2, codim + 1)):
        raise ValueError("need dbar_j > d for 2 <= j <= codim")
    p = D.pdim
    beta1 = D.betti_number(1)
    lower = _prod(Fraction(top[j], top[j] - d) for j in range(2, codim + 1))
    upper = comb(d + p - 1, p - 1)
    inputs = {"d": d, "codim": codim, "p": p, "dbar": list(top)}
    return (
        BoundReport.le("mu_lower", lower, beta1, inputs),
        BoundReport.le("mu_upper", beta1, upper, inputs),
    )


def beta_c_lower(D: BettiDiagram, d: int, codim: int) -> BoundReport:
    """d * dlow_2 ... dlow_{c-1} / [(dbar_c - d)(dbar_c - dlow_2)...(dbar_c - dlow_{c-1})] <= beta_c."""
    _check_equigenerated(D, d)
    _check_codim(D, codim)
    top = upper_degree_sequence(D)
    low = lower_degree_sequence(D)
    c = codim
    if top[c] <= d or any(top[c] <= low[j] for j in range(2, c)):
        raise ValueError("need dbar_c > d and dbar_c > dlow_j for 2 <= j < codim")
    num = d * _prod(low[j] for j in range(2, c))
    den = (top[c] - d) * _prod(top[c] - low[j] for j in range(2, c))
    inputs = {"d": d, "codim": c, "dbar_c": top[c], "dlow": list(low)}
    return BoundReport.le("beta_c_lower", num / den, D.betti_number(c), inputs)


@dataclass(frozen=True)
class LinearBounds:
    t: int
    C_t: int
    lower: int
    hk_lower: int

    @property
    def best_lower(self) -> int:
        return max(self.lower, self.hk_lower)


def linear_bounds(d: int, p: int, codim: int, t: int) -> LinearBounds:
    """Bounds on beta_t for a d-linear resolution of height codim and pdim p."""
    if not 2 <= codim <= p:
        raise ValueError("need 2 <= codim <= p")
    if not 1 <= t <= p:
        raise ValueError(f"t = {t} outside 1..{p}")
    head = comb(d + t - 2, t - 1)
    C_t = head * comb(d + p - 1, p - t)
    lower = head * comb(d + codim - 1, codim - t) if t <= codim else 0
    return LinearBounds(t, C_t, lower, comb(p, t))


@dataclass(frozen=True)
class ExtremalReport:
    hits: tuple  # indices t with beta_t == C_t
    extremal: bool  # every t hits
    consistent: bool  # either no t or every t hits


def is_extremal(D: BettiDiagram, d: int) -> ExtremalReport:
    """Whether beta_t = C_t; for linear resolutions one hit forces all."""
    p = D.pdim
    if linear_strand_length(D, d) != p:
        raise ValueError("diagram does not have a d-linear resolution")
    hits = tuple(
        t for t in range(1, p + 1)
        if D.betti_number(t) == comb(d + t - 2, t - 1) * comb(d + p - 1, p - t)
    )
    return ExtremalReport(hits, len(hits) == p, len(hits) in (0, p))


def linear_condition_reports(D: BettiDiagram, d: int, codim: int) -> list:
    """Bounds that follow from a (partially) linear resolution of S/I.

    With q the largest index satisfying N_{d,q}:
      * beta_t <= C_t for 2 <= t <= q;
      * beta_t >= C(d+t-2,t-1) C(d+c-1,c-t) for t <= c when q >= c;
      * beta_1 >= C(d+c'-1, c'-1) with c' = min(c, q);
      * beta_t >= C(p, t) for every t when the whole resolution is linear.
    """
    _check_equigenerated(D, d)
    _check_codim(D, codim)
    p, c = D.pdim, codim
    q = linear_strand_length(D, d)
    base = {"d": d, "codim": c, "p": p, "q": q}
    out = []
    for t in range(2, q + 1):
        C_t = comb(d + t - 2, t - 1) * comb(d + p - 1, p - t)
        out.append(BoundReport.le("linear_upper_Ct", D.betti_number(t), C_t, {**base, "t": t}))
    if q >= c:
        for t in range(1, c + 1):
            lo = comb(d + t - 2, t - 1) * comb(d + c - 1, c - t)
            out.append(BoundReport.le("linear_lower", lo, D.betti_number(t), {**base, "t": t}))
    cp = min(c, q)
    if cp >= 1:
        out.append(
            BoundReport.le("linear_mu_lower", comb(d + cp - 1, cp - 1), D.betti_number(1), base)
        )
    if q == p:
        for t in range(1, p + 1):
            out.append(BoundReport.le("herzog_kuhl_lower", comb(p, t), D.betti_number(t), {**base, "t": t}))
    return out


def eval_f(x, d: int, p: int, j: int) -> Fraction:
    """d/(x-d) * C(x-1, j-2) * C(x+p-j, p-j), the bound on a column-j pure entry at x = d_j."""
    if x <= d:
        raise ValueError("need x > d")
    num = Fraction(d, x - d)
    num *= _prod(Fraction(x - j + 2 + k, k + 1) for k in range(j - 2))
    num *= _prod(Fraction(x + 1 + k, k + 1) for k in range(p - j))
    return num


@dataclass(frozen=True)
class SmallPBound:
    j: int
    branch: str
    threshold: Optional[Fraction]
    at_start: Fraction  # f(d + j - 1)
    at_dbar: Fraction  # f(dbar_j)
    bound: Fraction
    capped: Optional[Fraction] = None  # f at the regularity cap, given dim S/I <= 2


def _reg_cap(d):
    return (3 * d - 2) * d * d


def small_p_bounds(d: int, p: int, dbar) -> dict:
    """Upper bounds on beta_j for projective dimension 3 or 4.

    For p = 4 the threshold decides which endpoint of [d+j-1, dbar_j]
    carries the maximum; both candidate values are kept for auditing.
    """
    if p not in (3, 4):
        raise ValueError("small-p bounds need p in {3, 4}")
    dbar = tuple(dbar)
    for j in range(1, p + 1):
        if dbar[j] < d + j - 1:
            raise ValueError(f"dbar_{j} = {dbar[j]} < d + {j - 1}")
    out = {}
    if p == 3:
        out[2] = SmallPBound(2, "p3", None, Fraction(d * (d + 2)), eval_f(dbar[2], d, 3, 2), Fraction(d * (d + 2)))
        out[3] = SmallPBound(3, "p3", None, Fraction(d * (d + 1), 2), eval_f(dbar[3], d, 3, 3), Fraction(d * (d + 1), 2))
        return out
    thresholds = {
        2: Fraction(d * d + 4 * d + 2),
        3: max(Fraction(d + 2), Fraction(d * d + 2 * d - 1, 2)),
        4: max(Fraction(d + 3), Fraction(d * d + 2, 3)),
    }
    closed = {
        2: Fraction(d * (d + 2) * (d + 3), 2),
        3: Fraction(d * (d + 1) * (d + 3), 2),
        4: Fraction(d * (d + 1) * (d + 2), 6),
    }
    for j in (2, 3, 4):
        start = eval_f(d + j - 1, d, 4, j)
        assert start == closed[j]
        at_dbar = eval_f(dbar[j], d, 4, j)
        if dbar[j] <= thresholds[j]:
            branch, bound = "closed", closed[j]
        else:
            branch, bound = "dbar", at_dbar
        capped = eval_f(_reg_cap(d) + j, d, 4, j)
        out[j] = SmallPBound(j, branch, thresholds[j], start, at_dbar, bound, capped)
    return out


def betti_upper_small_p(d: int, p: int, dbar, betti, dim_le_2: bool = False) -> list:
    """Compare beta_j against the small-p bounds for each j >= 2.

    When ``dim_le_2`` is asserted the regularity-capped value is also
    reported (conditional: the dimension hypothesis is not checked).
    """
    bounds = small_p_bounds(d, p, dbar)
    out = []
    for j, b in bounds.items():
        inputs = {
            "d": d, "p": p, "j": j, "dbar_j": tuple(dbar)[j], "branch": b.branch,
            "threshold": b.threshold, "at_start": b.at_start, "at_dbar": b.at_dbar,
        }
        out.append(BoundReport.le(f"beta{j}_upper_p{p}", Fraction(betti[j]), b.bound, inputs))
        if dim_le_2 and b.capped is not None:
            out.append(BoundReport.le(
                f"beta{j}_upper_p{p}_capped", Fraction(betti[j]), max(b.bound, b.capped), inputs,
                conditional=True, note="uses reg(S/I) <= (3d-2)d^2, valid when dim S/I <= 2 (not checked)",
            ))
    return out


def betti_upper_general(d: int, p: int, j: int, dbar_j: int, beta_j=None) -> BoundReport:
    """beta_j <= max(f(d+j-1), f(dbar_j)) for p >= 5."""
    if p < 5:
        raise ValueError("general bound needs p >= 5")
    if not 2 <= j <= p:
        raise ValueError(f"j = {j} outside 2..{p}")
    if dbar_j <= d:
        raise ValueError("need dbar_j > d")
    if dbar_j < d + j - 1:
        raise ValueError(f"dbar_j = {dbar_j} < d + j - 1")
    start, end = eval_f(d + j - 1, d, p, j), eval_f(dbar_j, d, p, j)
    rhs = max(start, end)
    inputs = {"d": d, "p": p, "j": j, "dbar_j": dbar_j, "at_start": start, "at_dbar": end}
    if beta_j is None:
        return BoundReport(f"beta{j}_upper_general", None, rhs, True, inputs, True, "no Betti number supplied")
    return BoundReport.le(f"beta{j}_upper_general", Fraction(beta_j), rhs, inputs)


def betti_upper_reports(D: BettiDiagram, d: int, dim_le_2: bool = False) -> list:
    """Dispatch to the small-p or general upper bounds by the pdim of D."""
    _check_equigenerated(D, d)
    p = D.pdim
    top = upper_degree_sequence(D)
    betti = D.betti_numbers()
    if p in (3, 4):
        return betti_upper_small_p(d, p, top, betti, dim_le_2)
    if p >= 5:
        return [betti_upper_general(d, p, j, top[j], betti[j]) for j in range(2, p + 1)]
    return []


def ths_check(d: int, first_syzygy_degrees, second_syzygy_degrees, reg: int) -> list:
    """Checks for a 3-generated d-equigenerated ideal of projective dimension 3.

    (i) D_m >= d_m + 1, (ii) reg <= 3d - 3, (iii) r <= 3d - 2, with both
    degree lists sorted in decreasing order.
    """
    first = sorted(first_syzygy_degrees, reverse=True)
    second = sorted(second_syzygy_degrees, reverse=True)
    r = len(first)
    if len(second) != r - 2:
        raise ValueError(f"expected {r - 2} second syzygies, got {len(second)}")
    inputs = {"d": d, "first": first, "second": second, "reg": reg}
    out = [
        BoundReport.le(f"ths_shift_{m + 1}", first[m] + 1, second[m], inputs)
        for m in range(r - 2)
    ]
    out.append(BoundReport.le("ths_reg", reg, 3 * d - 3, inputs))
    out.append(BoundReport.le("ths_r", r, 3 * d - 2, inputs))
    return out


def ths_from_diagram(D: BettiDiagram, d: int) -> list:
    if D.pdim != 3 or D.column(1) != {d: 3}:
        raise ValueError("expects three generators of degree d and projective dimension 3")
    first = [j for j, v in D.column(2).items() for _ in range(int(v))]
    second = [j for j, v in D.column(3).items() for _ in range(int(v))]
    return ths_check(d, first, second, regularity(D))


def sdall_bound(n: int, d: int, reg_SI: int, ht_I: int, beg_IJ: int) -> int:
    """max{reg S/I, n(d-2) - (n - ht I) beg(I/J_f)} for f of degree d."""
    if not n >= ht_I >= 2 or d < 2 or beg_IJ < 0:
        raise ValueError("need n >= ht_I >= 2, d >= 2, beg_IJ >= 0")
    return max(reg_SI, n * (d - 2) - (n - ht_I) * beg_IJ)


def sdall_report(n, d, reg_SI, ht_I, beg_IJ, reg_SJ=None) -> BoundReport:
    """Conditional bound on reg S/J_f; the depth hypotheses are never checked."""
    rhs = sdall_bound(n, d, reg_SI, ht_I, beg_IJ)
    inputs = {"n": n, "d": d, "reg_SI": reg_SI, "ht_I": ht_I, "beg_IJ": beg_IJ}
    note = "conditional bound: depth conditions on Koszul homology/cycles of I are assumed, not verified"
    if reg_SJ is None:
        return BoundReport("sdall", None, rhs, True, inputs, True, note)
    return BoundReport.le("sdall", reg_SJ, rhs, inputs, conditional=True, note=note)

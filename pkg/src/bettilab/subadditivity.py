"""
Inequalities between t_i = t_i^S(R) and tau_i = t_i^R(k).

Both sequences are caller-supplied. A missing entry never silently passes:
it either does not affect the verdict (the known part of a max already
dominates) or the report is marked conditional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .reports import BoundReport

NEG_INF = float("-inf")


class TSequence:
    """Upper degrees t_0, ..., of R over S.

    ``p`` is the projective dimension; None means infinite or unknown. Entries
    with index above p are -inf (the module vanishes there), entries past the
    supplied values but not above p are unknown.
    """

    def __init__(self, values, p: Optional[int] = None):
        self.values = tuple(int(v) for v in values)
        if not self.values or self.values[0] != 0:
            raise ValueError("t sequence must start with t_0 = 0")
        for i, v in enumerate(self.values[1:], start=1):
            if v < i + 1:
                raise ValueError(f"t_{i} = {v} < {i + 1}: the ideal would contain a linear form")
        if p is not None and len(self.values) > p + 1:
            raise ValueError(f"{len(self.values)} values given for projective dimension {p}")
        self.p = p

    @classmethod
    def from_diagram(cls, D):
        from .diagram import upper_degree_sequence

        return cls(upper_degree_sequence(D), D.pdim)

    @property
    def complete(self) -> bool:
        return self.p is not None and len(self.values) == self.p + 1

    @property
    def last(self) -> int:
        """Largest index with a known finite value."""
        return len(self.values) - 1

    def get(self, i: int):
        """Value, NEG_INF above p, or None when unknown."""
        if i < 0:
            raise IndexError(i)
        if self.p is not None and i > self.p:
            return NEG_INF
        if i < len(self.values):
            return self.values[i]
        return None

    def __repr__(self):
        return f"TSequence({self.values}, p={self.p})"


class TauSequence:
    """Upper degrees tau_0, tau_1, ... of k over R; ``koszul`` means tau_i = i throughout."""

    def __init__(self, values=(), koszul: bool = False):
        self.koszul = koszul
        self.values = tuple(int(v) for v in values)
        for i, v in enumerate(self.values):
            if v < i:
                raise ValueError(f"tau_{i} = {v} < {i}")
            if koszul and v != i:
                raise ValueError("koszul flag set but tau_i != i")

    @classmethod
    def koszul_sequence(cls):
        return cls((), koszul=True)

    def get(self, i: int):
        if i < 0:
            raise IndexError(i)
        if self.koszul:
            return i
        if i < len(self.values):
            return self.values[i]
        return None

    def __repr__(self):
        return "TauSequence(koszul)" if self.koszul else f"TauSequence({self.values})"


def _max_known(pairs):
    """max over (a, b) of a + b; returns (value, [indices with unknown parts])."""
    best, missing = NEG_INF, []
    for key, a, b in pairs:
        if a is None or b is None:
            missing.append(key)
        else:
            best = max(best, a + b)
    return best, missing


def _verdict(name, lhs, rhs, missing, inputs):
    """lhs <= max(known, unknown...): decided if known part suffices, else conditional."""
    holds = lhs <= rhs
    if holds or not missing:
        return BoundReport(name, lhs, rhs, holds, inputs)
    return BoundReport(
        name, lhs, rhs, False, {**inputs, "missing": missing}, True,
        "undetermined: rhs contains unknown terms",
    )


def _tau_range(t: TSequence, tau: TauSequence) -> int:
    """Largest i with tau_{i+1} to be checked in the second inequality."""
    if tau.koszul:
        return (t.p + 1) if t.p is not None else t.last
    return len(tau.values) - 2


def ptibi_first(t: TSequence, tau: TauSequence, i: int) -> BoundReport:
    """t_i <= max_{j=1..i} t_{i-j} + tau_{j+1}."""
    lhs = t.get(i)
    rhs, missing = _max_known((f"j={j}", t.get(i - j), tau.get(j + 1)) for j in range(1, i + 1))
    return _verdict("ptibi_1", lhs, rhs, missing, {"i": i})


def ptibi_second(t: TSequence, tau: TauSequence, i: int) -> BoundReport:
    """tau_{i+1} <= max_{j=max(0,i-p)..i-1} t_{i-j} + tau_j."""
    lhs = tau.get(i + 1)
    lo = 0 if t.p is None else max(0, i - t.p)
    rhs, missing = _max_known((f"j={j}", t.get(i - j), tau.get(j)) for j in range(lo, i))
    return _verdict("ptibi_2", lhs, rhs, missing, {"i": i})


def check_ptibi(t: TSequence, tau: TauSequence) -> list:
    out = []
    top = t.p if t.complete else t.last
    for i in range(1, top + 1):
        out.append(ptibi_first(t, tau, i))
    for i in range(1, _tau_range(t, tau) + 1):
        out.append(ptibi_second(t, tau, i))
    return out


@dataclass(frozen=True)
class Propagation:
    t_next_bound: object  # bound on t_m, m = len(t_prefix); NEG_INF if m > p
    t_missing: tuple
    tau_next_bound: object  # bound on tau_m from the second inequality at i = m - 1
    tau_missing: tuple

    @property
    def t_conditional(self) -> bool:
        return bool(self.t_missing)

    @property
    def tau_conditional(self) -> bool:
        return bool(self.tau_missing)


def propagate(t_prefix, tau_prefix, p: Optional[int] = None) -> Propagation:
    """Upper bounds for the entries following a known prefix.

    With m = len(t_prefix): the first inequality at i = m bounds t_m and the
    second at i = m - 1 bounds tau_m. Unknown terms are skipped and listed;
    the value is then a bound only if those terms do not exceed it.
    """
    t_prefix, tau_prefix = tuple(t_prefix), tuple(tau_prefix)
    if not t_prefix or not tau_prefix:
        raise ValueError("prefixes must be nonempty")
    m = len(t_prefix)

    def tg(i):
        if p is not None and i > p:
            return NEG_INF
        return t_prefix[i] if i < m else None

    def sg(i):
        return tau_prefix[i] if i < len(tau_prefix) else None

    if p is not None and m > p:
        t_bound, t_missing = NEG_INF, []
    else:
        t_bound, t_missing = _max_known((j + 1, tg(m - j), sg(j + 1)) for j in range(1, m + 1))
    i = m - 1
    lo = 0 if p is None else max(0, i - p)
    tau_bound, tau_missing = _max_known((j, tg(i - j), sg(j)) for j in range(lo, i))
    return Propagation(t_bound, tuple(t_missing), tau_bound, tuple(tau_missing))


INAPPLICABLE = "inapplicable"
EQUAL = "equal"
BELOW = "below"
ABOVE = "above"


@dataclass(frozen=True)
class SlopeVerdict:
    outcome: str
    report: Optional[BoundReport] = None
    reason: Optional[str] = None

    @property
    def violated(self) -> bool:
        return self.report is not None and self.report.failed


def check_linear_slope(t: TSequence, tau: TauSequence, i: int) -> SlopeVerdict:
    """Either t_i = tau_{i+1}, or tau_{i+1} <= (i-1)t_1 + 1 when t_i is smaller, or t_i <= i t_1."""
    if not 1 <= i or (t.p is not None and i > t.p):
        return SlopeVerdict(INAPPLICABLE, reason=f"need 1 <= i <= pdim, got i = {i}")
    needed = [t.get(j) for j in range(1, i + 1)] + [tau.get(j + 1) for j in range(1, i + 1)]
    if any(v is None for v in needed):
        return SlopeVerdict(INAPPLICABLE, reason="sequences too short")
    for j in range(1, i):
        if t.get(j) == tau.get(j + 1):
            return SlopeVerdict(INAPPLICABLE, reason=f"t_{j} = tau_{j + 1} = {t.get(j)}")
    ti, tau_next, t1 = t.get(i), tau.get(i + 1), t.get(1)
    inputs = {"i": i, "t_i": ti, "tau_i+1": tau_next, "t_1": t1}
    if ti == tau_next:
        return SlopeVerdict(EQUAL)
    if ti < tau_next:
        return SlopeVerdict(BELOW, BoundReport.le("linear_slope_below", tau_next, (i - 1) * t1 + 1, inputs))
    return SlopeVerdict(ABOVE, BoundReport.le("linear_slope_above", ti, i * t1, inputs))


def koszul_bounds(t: TSequence, n: int, q: Optional[int] = None, depth_gap: Optional[int] = None) -> list:
    """Consequences of reg_{n+1}^R(k) = 0 (or <= 1 for the N_q branch); the hypothesis is the caller's."""
    top = min(n, t.p if t.complete else t.last)
    out = [BoundReport.le("koszul_t_le_2i", t.get(i), 2 * i, {"i": i, "n": n}) for i in range(1, top + 1)]
    if q is not None:
        if not all(t.get(i) == i + 1 for i in range(1, q + 1)):
            out.append(BoundReport("nq_premise", None, None, False, {"q": q}, True,
                                   f"N_{q} does not hold; bound not applied"))
        else:
            for i in range(q + 1, top + 1):
                out.append(BoundReport.le("nq_t_le_2i_q_1", t.get(i), 2 * i - q + 1, {"i": i, "q": q, "n": n}))
    if depth_gap is not None:
        for i in range(1, min(top, depth_gap) + 1):
            out.append(BoundReport.le("koszul_step_2", t.get(i), t.get(i - 1) + 2,
                                      {"i": i, "depth_gap": depth_gap}))
    return out


def _reg_partial(get, i):
    """max_{j<=i} (s_j - j) over known entries; (value, complete?)."""
    best, complete = NEG_INF, True
    for j in range(i + 1):
        v = get(j)
        if v is None:
            complete = False
        elif v != NEG_INF:
            best = max(best, v - j)
    return best, complete


def reg_intertwine(t: TSequence, tau: TauSequence, p: Optional[int] = None) -> list:
    """Regularity intertwining between R over S and k over R.

    (1) t_i <= 2i + sum_{j=2}^{i+1} reg_j^R(k)
    (2) reg_i^S(R) <= reg_{i-1}^S(R) + reg_{i+1}^R(k) + 1
    (3) reg_{i+1}^R(k) <= reg_{min(i,p)}^S(R) + reg_{i-1}^R(k) - 1
    (4) reg^S(R) = 1 forces every reg^R partial to vanish.
    Right-hand sides are monotone in the unknowns, so a known lower bound
    that already satisfies the inequality gives a definite verdict.
    """
    if p is None:
        p = t.p
    elif t.p is not None and p != t.p:
        raise ValueError(f"p = {p} disagrees with the sequence's p = {t.p}")
    T = TSequence(t.values, p) if t.p is None and p is not None else t

    def regS(i):
        return _reg_partial(T.get, i)

    def regR(i):
        return _reg_partial(tau.get, i)

    out = []
    top = T.p if T.complete else T.last
    for i in range(1, top + 1):
        parts = [regR(j) for j in range(2, i + 2)]
        rhs = 2 * i + sum(v for v, _ in parts)
        missing = [j for j, (_, ok) in zip(range(2, i + 2), parts) if not ok]
        out.append(_verdict("reg_1", T.get(i), rhs, missing, {"i": i}))
    for i in range(1, top + 1):
        lhs, _ = regS(i)
        prev, _ = regS(i - 1)
        r_next, ok = regR(i + 1)
        out.append(_verdict("reg_2", lhs, prev + r_next + 1, [] if ok else [f"reg_{i + 1}^R"], {"i": i}))
    for i in range(1, _tau_range(T, tau) + 1):
        lhs, ok_l = regR(i + 1)
        if not ok_l:
            continue
        cap = i if p is None else min(i, p)
        s, ok_s = regS(cap)
        r_prev, _ = regR(i - 1)
        name = "reg_3" if p is None or i <= p else "reg_3_capped"
        out.append(_verdict(name, lhs, s + r_prev - 1, [] if ok_s else [f"reg_{cap}^S"], {"i": i, "p": p}))
    if T.complete:
        full, _ = regS(T.p)
        if full == 1:
            top_tau = _tau_range(T, tau) + 1
            worst, _ = regR(top_tau)
            out.append(BoundReport.le("reg_4_koszul", worst, 0, {"reg_S": full},
                                      note="reg^S(R) = 1, so all known reg^R partials must vanish"))
    return out

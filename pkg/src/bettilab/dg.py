"""
Necessary conditions for a minimal free resolution of S/I to carry an
associative DG-algebra structure. A "consistent" verdict only means the
test found nothing; it never certifies that a structure exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .diagram import BettiDiagram
from .subadditivity import NEG_INF, TauSequence, TSequence

CONSISTENT = "consistent"
OBSTRUCTION = "obstruction"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class DGVerdict:
    test: str
    status: str
    witness: Optional[tuple] = None
    obstructions: tuple = ()
    details: dict = field(default_factory=dict)
    note: Optional[str] = None

    @property
    def obstructed(self) -> bool:
        return self.status == OBSTRUCTION

    def to_json(self):
        from .reports import jsonable

        out = {"test": self.test, "status": self.status, "details": jsonable(self.details)}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.obstructions:
            out["obstructions"] = [list(o) for o in self.obstructions]
        if self.note:
            out["note"] = self.note
        return out


def min_parts(total: int, parts) -> Optional[int]:
    """Fewest summands from ``parts`` (with repetition) adding up to total, None if impossible."""
    parts = tuple(sorted(set(parts)))

    @lru_cache(maxsize=None)
    def go(rest):
        if rest == 0:
            return 0
        best = None
        for a in parts:
            if a > rest:
                break
            sub = go(rest - a)
            if sub is not None and (best is None or sub + 1 < best):
                best = sub + 1
        return best

    return go(total)


def strand_generation_test(D: BettiDiagram, m: int) -> DGVerdict:
    """Can every H_{i,tau}, 2 <= i <= m, come from products of linear-strand classes?

    A product of classes from H_{j_1,j_1+1}, ..., H_{j_s,j_s+1} lives in
    homological degree sum j_k and internal degree i + s; multiplying by H_0
    only raises the degree. So (i, tau) is reachable iff i splits into s
    parts from L = {j : beta_{j,j+1} != 0} with s <= tau - i.

    The caller asserts reg_{m+1}^R(k) = 0. That forces I to be generated by
    quadrics, so diagrams with generators in other degrees are reported
    inapplicable rather than tested.
    """
    if m < 2:
        return DGVerdict("strand_generation", INAPPLICABLE, note="m < 2: nothing to test")
    gens = D.column(1) if D.pdim >= 1 else {}
    if set(gens) == {1}:
        # generated by variables: the resolution is a Koszul complex, a DG algebra
        return DGVerdict("strand_generation", CONSISTENT, details={"generator_degrees": [1]},
                         note="ideal of linear forms; resolution is a Koszul complex")
    if set(gens) != {2}:
        return DGVerdict(
            "strand_generation", INAPPLICABLE,
            details={"generator_degrees": sorted(gens)},
            note="the Koszul hypothesis needs an ideal generated by quadrics",
        )
    linear = sorted(j for j in range(1, D.pdim + 1) if D[(j, j + 1)])
    bad = []
    checked = 0
    for (i, tau), _ in D.items():
        if not 2 <= i <= m:
            continue
        checked += 1
        s = min_parts(i, linear)
        if s is None or s > tau - i:
            bad.append((i, tau))
    details = {"linear_support": linear, "m": m, "entries_checked": checked}
    if bad:
        return DGVerdict("strand_generation", OBSTRUCTION, bad[0], tuple(bad), details,
                         "entry not reachable from the linear strand: no DG-algebra structure")
    return DGVerdict("strand_generation", CONSISTENT, details=details)


def subadditivity_obstruction(t: TSequence, tau: Optional[TauSequence], ht_ok: bool) -> DGVerdict:
    """Whenever tau_{i+1} < t_i (i >= 2) a DG structure forces t_i <= max_j t_j + t_{i-j}."""
    if not ht_ok:
        return DGVerdict("subadditivity", INAPPLICABLE, note="needs height of I at least 2")
    if tau is None:
        return DGVerdict("subadditivity", INAPPLICABLE, note="no tau sequence supplied")
    top = t.p if t.complete else t.last
    premises, bad = [], []
    for i in range(2, top + 1):
        ti, nxt = t.get(i), tau.get(i + 1)
        if nxt is None or ti in (None, NEG_INF) or not nxt < ti:
            continue
        premises.append(i)
        rhs = max(t.get(j) + t.get(i - j) for j in range(1, i))
        if ti > rhs:
            bad.append((i, ti, rhs))
    details = {"premise_indices": premises}
    if bad:
        return DGVerdict("subadditivity", OBSTRUCTION, bad[0], tuple(bad), details,
                         "t_i exceeds max t_j + t_(i-j): no DG-algebra structure")
    if not premises:
        return DGVerdict("subadditivity", INAPPLICABLE, details=details,
                         note="no index with tau_(i+1) < t_i among known entries")
    return DGVerdict("subadditivity", CONSISTENT, details=details)

"""
The explicit resolution of S/J for f = x^d y + y^d z + z^d w in k[x,y,z,w].

J is generated by (1/d) df/dx, df/dy, df/dz, df/dw. The resolution has
shape S <- S(-d)^4 <- S(-(d+1)) + S(-2d)^6 <- S(-(2d+1))^4 + S(-(3d-1))
<- S(-(2d+2)), and the verifiers below check it with the Buchsbaum-Eisenbud
criterion: it is a complex, the ranks add up, and the Fitting ideals have
large enough height (witnessed by explicit minors).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import BettiDiagram
from .poly import DEFAULT_PRIME, MultiPoly, PolyMatrix, graded_membership, pfaffians_max, rank_random

NAMES = ("x", "y", "z", "w")
N = 4
PAIRS = list(combinations(range(4), 2))


def _var(k):
    return MultiPoly.var(k, N)


def _mono(x=0, y=0, z=0, w=0, c=1):
    return MultiPoly.monomial((x, y, z, w), c)


ZERO = MultiPoly.zero(N)


def gradient(d):
    """(1/d) df/dx, df/dy, df/dz, df/dw."""
    return [
        _mono(x=d - 1, y=1),
        _mono(x=d) + _mono(y=d - 1, z=1, c=d),
        _mono(y=d) + _mono(z=d - 1, w=1, c=d),
        _mono(z=d),
    ]


def linear_syzygy(d):
    """The degree-one syzygy of the gradient: x, -y, d z, -d^2 w."""
    return [_var(0), _var(1).scale(-1), _var(2).scale(d), _var(3).scale(-d * d)]


def koszul_matrix(v):
    """Column (a, b), a < b, is v_b e_a - v_a e_b."""
    cols = []
    for a, b in PAIRS:
        col = [ZERO] * len(v)
        col[a] = v[b]
        col[b] = -v[a]
        cols.append(col)
    return [list(row) for row in zip(*cols)]


def socle_element(d):
    return _mono(x=d - 1, z=d - 1)


def frak_a(d):
    return [_mono(z=d - 1, c=-1), ZERO, _mono(y=d - 1, c=d), ZERO, ZERO, _mono(x=d - 1, c=-d)]


def pfaffian_matrix(d):
    """The 5x5 alternating matrix whose maximal Pfaffians generate (J, x^{d-1} z^{d-1})."""
    x, y, z, w = (_var(k) for k in range(4))
    zd, yd, xd = _mono(z=d - 1), _mono(y=d - 1), _mono(x=d - 1)
    rows = [
        [ZERO, zd, ZERO, -x, yd],
        [-zd, ZERO, ZERO, -y, ZERO],
        [ZERO, ZERO, ZERO, z.scale(d), xd],
        [x, y, z.scale(-d), ZERO, w.scale(-d)],
        [-yd, ZERO, -xd, w.scale(d), ZERO],
    ]
    return PolyMatrix(rows)


@dataclass
class JacobianResolution:
    d: int
    phi1: PolyMatrix
    phi2: PolyMatrix
    phi3: PolyMatrix
    phi4: PolyMatrix
    A_G: PolyMatrix
    degree_ledger: dict

    @property
    def maps(self):
        return (self.phi1, self.phi2, self.phi3, self.phi4)

    def replace(self, **changes):
        data = dict(self.__dict__)
        data.update(changes)
        return JacobianResolution(**data)


def build(d: int) -> JacobianResolution:
    if d < 2:
        raise ValueError("need d >= 2")
    df = gradient(d)
    ell = linear_syzygy(d)
    F0, F1 = [0], [d] * 4
    F2 = [d + 1] + [2 * d] * 6
    F3 = [2 * d + 1] * 4 + [3 * d - 1]
    F4 = [2 * d + 2]
    phi1 = PolyMatrix([df], F0, F1)
    K_df = koszul_matrix(df)
    phi2 = PolyMatrix([[ell[r]] + K_df[r] for r in range(4)], F1, F2)
    K_ell_t = [list(col) for col in zip(*koszul_matrix(ell))]  # 6 x 4
    A = frak_a(d)
    top = df + [socle_element(d)]
    phi3 = PolyMatrix([top] + [K_ell_t[k] + [A[k]] for k in range(6)], F2, F3)
    phi4 = PolyMatrix([[e] for e in ell] + [[ZERO]], F3, F4)
    ledger = {"F0": F0, "F1": F1, "F2": F2, "F3": F3, "F4": F4}
    return JacobianResolution(d, phi1, phi2, phi3, phi4, pfaffian_matrix(d), ledger)


def _res(arg) -> JacobianResolution:
    return arg if isinstance(arg, JacobianResolution) else build(arg)


def verify_complex(arg):
    """(phi1 phi2 = 0, phi2 phi3 = 0, phi3 phi4 = 0), exact."""
    r = _res(arg)
    return (
        (r.phi1 @ r.phi2).is_zero(),
        (r.phi2 @ r.phi3).is_zero(),
        (r.phi3 @ r.phi4).is_zero(),
    )


def verify_graded(arg):
    """Every entry has the degree dictated by the shifts, for each map."""
    r = _res(arg)
    return tuple(m.is_graded() for m in r.maps)


def verify_ranks(arg, p=DEFAULT_PRIME, seed=0, trials=5):
    r = _res(arg)
    ranks = tuple(rank_random(m, p, trials, seed) for m in r.maps)
    sizes = (1, 4, 7, 5, 1)
    adds_up = all(ranks[k] + ranks[k + 1] == sizes[k + 1] for k in range(3)) and ranks[0] == 1
    return {"ranks": ranks, "adds_up": adds_up, "expected": (1, 3, 4, 1), "prime": p, "seed": seed}


def _match_monomial(poly, exp):
    """Nonzero scalar c with poly == c * monomial(exp), else None."""
    if poly.is_monomial() and next(iter(poly.terms)) == exp:
        return next(iter(poly.terms.values()))
    return None


def _vanishes_on(poly, zero_vars):
    """poly lies in the prime generated by the given variables."""
    return all(any(e[k] for k in zero_vars) for e in poly.terms)


def verify_fitting_minors(arg) -> dict:
    """Witnesses for ht I_3(phi2) >= 2, ht I_4(phi3) >= 3, ht I_1(phi4) = 4."""
    r = _res(arg)
    d = r.d
    minors2 = [(rows, cols, m) for rows, cols, m in r.phi2.minors(3) if m]
    minors3 = [(rows, cols, m) for rows, cols, m in r.phi3.minors(4) if m]

    def find(minors, exp):
        for rows, cols, m in minors:
            c = _match_monomial(m, exp)
            if c is not None:
                return {"rows": list(rows), "cols": list(cols), "scalar": c}
        return None

    w2 = {
        "z^(3d)": find(minors2, (0, 0, 3 * d, 0)),
        "x^(3(d-1))y^3": find(minors2, (3 * (d - 1), 3, 0, 0)),
    }
    w3 = {
        "z^(d+2)": find(minors3, (0, 0, d + 2, 0)),
        "x^(d-1)y^3": find(minors3, (d - 1, 3, 0, 0)),
    }
    mixed = []
    for rows, cols, m in minors3:
        lead = m.terms.get((0, d + 2, 0, 0))
        other = m.terms.get((0, 2, d - 1, 1))
        if lead and other and set(m.terms) == {(0, d + 2, 0, 0), (0, 2, d - 1, 1)}:
            mixed.append({"rows": list(rows), "cols": list(cols), "c": other / lead})
    # primes over I_4(phi3) contain z and one of x, y; they must not be (x,z) or (y,z)
    escapes_xz = any(not _vanishes_on(m, (0, 2)) for _, _, m in minors3)
    escapes_yz = any(not _vanishes_on(m, (1, 2)) for _, _, m in minors3)
    phi4_entries = [r.phi4[k, 0] for k in range(r.phi4.rows)]
    maximal = all(any(_match_monomial(e, tuple(int(k == v) for k in range(4))) is not None
                      for e in phi4_entries) for v in range(4))
    return {
        "d": d,
        "phi2_3minors": w2,
        "phi3_4minors": w3,
        "mixed_minors": mixed,
        "height_I3_phi2_ge_2": all(w2.values()),
        "height_I4_phi3_ge_3": all(w3.values()) and escapes_xz and escapes_yz,
        "I4_not_in_(x,z)": escapes_xz,
        "I4_not_in_(y,z)": escapes_yz,
        "I1_phi4_is_maximal": maximal,
        "nonzero_minors": {"phi2": len(minors2), "phi3": len(minors3)},
    }


def verify_socle(arg) -> dict:
    """x^{d-1} z^{d-1} is a socle element of S/J and the Pfaffians generate (J, it)."""
    r = _res(arg)
    d = r.d
    gens = gradient(d)
    s = socle_element(d)
    outside = graded_membership(s, gens) is None
    times = {}
    for k, name in enumerate(NAMES):
        cof = graded_membership(_var(k) * s, gens)
        times[name] = cof is not None
    pf = pfaffians_max(r.A_G)
    wanted = gens + [s]
    assignment = []
    used = set()
    for p in pf:
        hit = None
        for k, g in enumerate(wanted):
            if k not in used and p.ratio_to(g):
                hit = k
                break
        if hit is not None:
            used.add(hit)
        assignment.append(hit)
    matched = len(used) == 5
    return {
        "d": d,
        "socle_outside_J": outside,
        "m_times_socle_in_J": times,
        "pfaffians": [p.to_string(NAMES) for p in pf],
        "pfaffian_assignment": assignment,
        "pfaffian_match": matched,
        "socle_degree": s.degree(),
        "tail_shift": s.degree() + 4,
        "tail_shift_matches_ledger": s.degree() + 4 == r.degree_ledger["F4"][0],
        "ok": outside and all(times.values()) and matched,
    }


INCREASING = "increasing"
EQUAL = "equal"
STRICTLY_DECREASING = "strictly_decreasing"


def tail_monotonicity(d: int) -> dict:
    if d < 2:
        raise ValueError("need d >= 2")
    d3, d4 = max(2 * d + 1, 3 * d - 1), 2 * d + 2
    verdict = INCREASING if d3 < d4 else EQUAL if d3 == d4 else STRICTLY_DECREASING
    return {"d": d, "dbar3": d3, "dbar4": d4, "verdict": verdict}


def diagram(d: int) -> BettiDiagram:
    """Betti diagram read off the degree ledger."""
    entries = {}
    for i, shifts in enumerate(build(d).degree_ledger.values()):
        for s in shifts:
            entries[(i, s)] = entries.get((i, s), 0) + 1
    return BettiDiagram(entries)


def report(d: int, p=DEFAULT_PRIME, seed=0, trials=5) -> dict:
    r = build(d)
    cx = verify_complex(r)
    ranks = verify_ranks(r, p, seed, trials)
    fit = verify_fitting_minors(r)
    soc = verify_socle(r)
    tail = tail_monotonicity(d)
    ok = (
        all(cx) and all(verify_graded(r)) and ranks["ranks"] == (1, 3, 4, 1) and ranks["adds_up"]
        and fit["height_I3_phi2_ge_2"] and fit["height_I4_phi3_ge_3"] and fit["I1_phi4_is_maximal"]
        and soc["ok"]
    )
    return {
        "d": d,
        "complex": list(cx),
        "graded": list(verify_graded(r)),
        "ranks": ranks,
        "fitting": fit,
        "socle": soc,
        "tail": tail,
        "degree_ledger": r.degree_ledger,
        "ok": ok,
    }

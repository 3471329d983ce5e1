"""Real forms determined by a grading element, and compact characteristic vectors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .root_system import (CartanType, RootSystem, decompose, enumerate_weyl,
                          subsystem_base)


@dataclass(frozen=True)
class RootParity:
    compact: frozenset
    noncompact: frozenset


@dataclass(frozen=True)
class RealFormLabel:
    name: str
    k_type: tuple       # sorted normalized component labels of k^ss
    center: int         # dim of the center of k
    dim_k: int
    dim_p: int

    @property
    def signature(self):
        return self.dim_p - self.dim_k

    @property
    def full_name(self):
        return _EXCEPTIONAL_FULL.get(self.name, self.name)


@dataclass(frozen=True)
class CompactCharVector:
    gamma: tuple
    alpha_prime_value: int


_EXCEPTIONAL_FULL = {
    "EII": "EII = E6(2)", "EIII": "EIII = E6(-14)", "EV": "EV = E7(7)",
    "EVI": "EVI = E7(-5)", "EVII": "EVII = E7(-25)", "EVIII": "EVIII = E8(8)",
    "EIX": "EIX = E8(-24)", "FI": "FI = F4(4)", "FII": "FII = F4(-20)", "G": "G = G2(2)",
}


def _parity(rs, E, k):
    v = Fraction(rs.evaluate(rs.roots[k], E))
    if v.denominator != 1:
        raise ValueError("grading element is not integral on the roots")
    return int(v) % 2


def split_roots(rs: RootSystem, E, indices=None) -> RootParity:
    indices = range(len(rs.roots)) if indices is None else indices
    comp, non = set(), set()
    for k in indices:
        (non if _parity(rs, E, k) else comp).add(k)
    return RootParity(frozenset(comp), frozenset(non))


# -- k-type normalization ---------------------------------------------------

def _norm(family, n):
    """Normalize low-rank coincidences; returns (list of labels, center dim)."""
    if n == 0:
        return [], 0
    if family == "D":
        if n == 1:
            return [], 1
        if n == 2:
            return ["A1", "A1"], 0
        if n == 3:
            return ["A3"], 0
    if family in "BC" and n == 1:
        return ["A1"], 0
    if family in "BC" and n == 2:
        return ["B2"], 0
    return [f"{family}{n}"], 0


def _ktype(parts):
    labels, center = [], 0
    for fam, n in parts:
        l, c = _norm(fam, n)
        labels += l
        center += c
    return tuple(sorted(labels)), center


def _form(name, parts, extra_center=0):
    kt, c = _ktype(parts)
    return name, kt, c + extra_center


def _candidates(ct: CartanType):
    """(name, k-type, center) for the equal-rank noncompact real forms of ct."""
    f, n = ct.family, ct.rank
    if f == "A":
        m = n + 1
        return [_form(f"su({m - q},{q})", [("A", m - q - 1), ("A", q - 1)], 1)
                for q in range(1, m // 2 + 1)]
    if f == "B":
        return [_form(f"so({2 * a},{2 * n + 1 - 2 * a})", [("D", a), ("B", n - a)])
                for a in range(1, n + 1)]
    if f == "C":
        return ([_form(f"sp({n - q},{q})", [("C", n - q), ("C", q)]) for q in range(1, n // 2 + 1)]
                + [_form(f"sp({n},R)", [("A", n - 1)], 1)])
    if f == "D":
        return ([_form(f"so({2 * (n - q)},{2 * q})", [("D", n - q), ("D", q)])
                 for q in range(1, n // 2 + 1)]
                + [_form(f"so*({2 * n})", [("A", n - 1)], 1)])
    return {
        ("E", 6): [_form("EII", [("A", 5), ("A", 1)]), _form("EIII", [("D", 5)], 1)],
        ("E", 7): [_form("EV", [("A", 7)]), _form("EVI", [("D", 6), ("A", 1)]),
                   _form("EVII", [("E", 6)], 1)],
        ("E", 8): [_form("EVIII", [("D", 8)]), _form("EIX", [("E", 7), ("A", 1)])],
        ("F", 4): [_form("FI", [("C", 3), ("A", 1)]), _form("FII", [("B", 4)])],
        ("G", 2): [_form("G", [("A", 1), ("A", 1)])],
    }[(f, n)]


def _compact_name(ct: CartanType):
    f, n = ct.family, ct.rank
    return {"A": f"su({n + 1})", "B": f"so({2 * n + 1})", "C": f"sp({n})",
            "D": f"so({2 * n})"}.get(f, f"compact {ct}")


def real_form_of_subsystem(rs: RootSystem, indices, E, ct: CartanType) -> RealFormLabel:
    """Identify the real form of the simple subsystem ``indices`` (of type ``ct``) from E-parity."""
    par = split_roots(rs, E, indices)
    kbase = subsystem_base(rs, par.compact)
    parts = [(t.family, t.rank) for t, _ in decompose(rs, kbase)]
    kt, c = _ktype(parts)
    center = ct.rank - len(kbase) + c
    dim_k = len(par.compact) + ct.rank
    dim_p = len(par.noncompact)
    if not par.noncompact:
        return RealFormLabel(_compact_name(ct), kt, center, dim_k, dim_p)
    for name, ckt, cc in _candidates(ct):
        if ckt == kt and cc == center:
            return RealFormLabel(name, kt, center, dim_k, dim_p)
    raise AssertionError(f"no real form of {ct} with k-type {kt} + center {center}")


def identify_real_form(rs: RootSystem, E) -> RealFormLabel:
    if any(x not in (0, 1) for x in E):
        raise ValueError("grading coefficients must be 0 or 1")
    return real_form_of_subsystem(rs, range(len(rs.roots)), E, rs.type)


def compact_simple_system(rs: RootSystem, E, W=None):
    """(S_k, alpha', w): a base of the compact roots inside w(S_ext), with w(S) minus S_k = {alpha'}.

    The witness w is the first element of W in breadth-first order that works.
    """
    par = split_roots(rs, E)
    kbase = subsystem_base(rs, par.compact)
    kidx = {rs.index[b] for b in kbase}
    W = enumerate_weyl(rs) if W is None else W
    r = rs.rank
    theta_neg = rs.index[tuple(-x for x in rs.highest_root)]
    for w, word in zip(W.elements, W.words):
        wS = [w[i] for i in range(r)]
        ext = set(wS) | {w[theta_neg]}
        if kidx <= ext:
            rest = [k for k in wS if k not in kidx]
            if len(rest) == 1:
                return kbase, rs.roots[rest[0]], word
    raise AssertionError("compact base is not contained in any W-image of the extended simple system")


def compact_characteristic_vector(rs: RootSystem, E, Z, W=None) -> CompactCharVector:
    kbase, ap, _ = compact_simple_system(rs, E, W)
    Z = tuple(Fraction(x) for x in Z)
    while True:
        for b in kbase:
            if rs.evaluate(b, Z) < 0:
                Z = rs.reflect_grading_by(Z, b)
                break
        else:
            break
    gamma = tuple(int(rs.evaluate(b, Z)) for b in kbase)
    return CompactCharVector(gamma, int(rs.evaluate(ap, Z)))

"""Weights of irreducible representations and Hodge numbers of Hodge representations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from .root_system import RootSystem, SizeLimitError

REP_DIM_CAP_DEFAULT = 10**5


def _frac(x) -> Fraction:
    x = sympy.nsimplify(x)
    return Fraction(int(x.p), int(x.q))


@lru_cache(maxsize=None)
def _inverse_cartan(rs: RootSystem):
    C = sympy.Matrix(rs.cartan)
    Ci = C.inv()
    return tuple(tuple(_frac(Ci[i, j]) for j in range(rs.rank)) for i in range(rs.rank))


def omega_to_root(rs: RootSystem, m):
    """Root coordinates of the weight sum_j m_j omega_j."""
    Ci = _inverse_cartan(rs)
    return tuple(sum(m[j] * Ci[j][i] for j in range(rs.rank)) for i in range(rs.rank))


def root_to_omega(rs: RootSystem, a):
    return tuple(sum(a[i] * rs.cartan[i][j] for i in range(rs.rank)) for j in range(rs.rank))


@dataclass(frozen=True)
class HighestWeight:
    omega_coords: tuple

    def __post_init__(self):
        if any(int(x) != x or x < 0 for x in self.omega_coords):
            raise ValueError("highest weight must be dominant integral")


@dataclass
class WeightSystem:
    rs: RootSystem = field(repr=False)
    entries: list  # [(omega coords, multiplicity)]
    label: str = ""

    @property
    def dim(self):
        return sum(m for _, m in self.entries)

    def root_coords(self):
        return [(omega_to_root(self.rs, w), m) for w, m in self.entries]

    def as_dict(self):
        return dict(self.entries)


def weyl_dimension(rs: RootSystem, lam) -> int:
    rho = (1,) * rs.rank
    lr = omega_to_root(rs, tuple(l + 1 for l in lam))
    r0 = omega_to_root(rs, rho)
    num = den = Fraction(1)
    for a in rs.positive:
        num *= rs.form(lr, a)
        den *= rs.form(r0, a)
    d = num / den
    assert d.denominator == 1
    return int(d)


def weight_system(rs: RootSystem, lam, cap=REP_DIM_CAP_DEFAULT) -> WeightSystem:
    """Weights and multiplicities of V(lam) by Freudenthal's recursion."""
    lam = tuple(int(x) for x in getattr(lam, "omega_coords", lam))
    HighestWeight(lam)
    if len(lam) != rs.rank:
        raise ValueError("highest weight has the wrong length")
    dim = weyl_dimension(rs, lam)
    if dim > cap:
        raise SizeLimitError(f"dim V = {dim} exceeds the representation cap {cap}")
    r = rs.rank
    C = rs.cartan
    # weight set via sigma_i-strings, recorded with depth below lam
    depth = {lam: 0}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for i in range(r):
            for k in range(1, mu[i] + 1):
                nu = tuple(mu[j] - k * C[i][j] for j in range(r))
                if nu not in depth:
                    depth[nu] = depth[mu] + k
                    stack.append(nu)
    order = sorted(depth, key=lambda w: (depth[w], w))
    rho = omega_to_root(rs, (1,) * r)
    lr = tuple(x + y for x, y in zip(omega_to_root(rs, lam), rho))
    top = rs.form(lr, lr)
    pos_omega = [root_to_omega(rs, a) for a in rs.positive]
    # (omega_j, alpha) per positive root, so (nu, alpha) is a dot product in omega coordinates
    pair_w = [tuple(rs.form(omega_to_root(rs, tuple(int(i == j) for i in range(r))), a) for j in range(r))
              for a in rs.positive]
    mult = {lam: Fraction(1)}
    for mu in order[1:]:
        s = Fraction(0)
        for ao, pw in zip(pos_omega, pair_w):
            nu = tuple(x + y for x, y in zip(mu, ao))
            while nu in depth:
                m = mult.get(nu)
                if m:
                    s += m * sum(x * y for x, y in zip(nu, pw))
                nu = tuple(x + y for x, y in zip(nu, ao))
        mr = omega_to_root(rs, mu)
        mrho = tuple(x + y for x, y in zip(mr, rho))
        val = 2 * s / (top - rs.form(mrho, mrho))
        assert val.denominator == 1, "non-integral multiplicity"
        if val:
            mult[mu] = val
    entries = [(w, int(m)) for w, m in sorted(mult.items(), key=lambda t: (depth[t[0]], t[0]))]
    ws = WeightSystem(rs, entries, label=f"V({','.join(map(str, lam))})")
    assert ws.dim == dim
    return ws


def adjoint_weight_system(rs: RootSystem) -> WeightSystem:
    entries = [(root_to_omega(rs, a), 1) for a in rs.roots]
    entries.append(((0,) * rs.rank, rs.rank))
    return WeightSystem(rs, entries, label="adjoint")


@dataclass
class HodgeNumbers:
    n: int
    h: dict  # p -> h^{p, n-p}

    @property
    def vector(self):
        """h^{p,n-p} for p from the lowest to the highest occupied level."""
        ps = range(min(self.h), max(self.h) + 1)
        return tuple(self.h.get(p, 0) for p in ps)

    @property
    def f(self):
        """f^p = sum_{p' >= p} h^{p', n-p'}."""
        out, acc = {}, 0
        for p in sorted(self.h, reverse=True):
            acc += self.h[p]
            out[p] = acc
        return out

    @property
    def dim(self):
        return sum(self.h.values())


def _level(mu_e, n):
    p = mu_e + Fraction(n, 2)
    if p.denominator != 1:
        raise ValueError("inconsistent (weight, grading, n): non-integral Hodge index")
    return int(p)


def hodge_numbers(ws: WeightSystem, E, n: int) -> HodgeNumbers:
    rs = ws.rs
    h = {}
    for (w, m), (a, _) in zip(ws.entries, ws.root_coords()):
        p = _level(rs.evaluate(a, E), n)
        h[p] = h.get(p, 0) + m
    return HodgeNumbers(n, h)

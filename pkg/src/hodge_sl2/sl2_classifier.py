"""Horizontal SL(2)s and R-split polarized mixed Hodge structures on a Mumford-Tate domain.

A domain is given by a simple type and a 0/1 grading vector E = sum_{i in I} S^i.
Classes are indexed by W0-orbits of Levi subsystems l on which E restricts to a
distinguished semisimple element; W0 is generated by the simple reflections
fixing E.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .nilpotent_orbits import is_distinguished_grading, solve_dual
from .real_forms import real_form_of_subsystem
from .rep_weights import HodgeNumbers, WeightSystem, adjoint_weight_system
from .root_system import (CartanType, LeviSubsystem, RootSystem, build_root_system,
                          decompose, enumerate_levis, orbit_of_set, parabolic_subgroup)


@dataclass(frozen=True)
class MTDomainSpec:
    cartan_type: CartanType
    grading_coeffs: tuple

    def __post_init__(self):
        if isinstance(self.cartan_type, str):
            object.__setattr__(self, "cartan_type", CartanType.parse(self.cartan_type))
        c = tuple(int(x) for x in self.grading_coeffs)
        object.__setattr__(self, "grading_coeffs", c)
        if len(c) != self.cartan_type.rank:
            raise ValueError(f"grading vector must have length {self.cartan_type.rank}")
        if any(x not in (0, 1) for x in c):
            raise ValueError("grading coefficients must be 0 or 1")
        if not any(c):
            raise ValueError("grading vector must be nonzero")

    @classmethod
    def from_indices(cls, cartan_type, indices):
        ct = CartanType.parse(cartan_type) if isinstance(cartan_type, str) else cartan_type
        bad = [i for i in indices if not 1 <= i <= ct.rank]
        if bad:
            raise ValueError(f"grading indices {bad} out of range 1..{ct.rank}")
        return cls(ct, tuple(int(i + 1 in set(indices)) for i in range(ct.rank)))

    @property
    def rs(self) -> RootSystem:
        return build_root_system(self.cartan_type)

    @property
    def E(self):
        return self.grading_coeffs

    @property
    def indices(self):
        return tuple(i + 1 for i, c in enumerate(self.grading_coeffs) if c)

    @property
    def w0_generators(self):
        return tuple(i for i, c in enumerate(self.grading_coeffs) if c == 0)


@dataclass
class SL2Class:
    levi: LeviSubsystem
    Z: tuple
    zeta: tuple
    codim: int
    levi_real_form: tuple
    is_hodge_tate: bool

    @property
    def base(self):
        return self.levi.base

    @property
    def component_types(self):
        return self.levi.component_types


@dataclass
class DeligneDiamond:
    n: int
    cells: dict = field(default_factory=dict)  # (p, q) -> multiplicity

    @property
    def dim(self):
        return sum(self.cells.values())

    def support(self):
        return set(self.cells)

    def is_diagonal(self):
        return all(p == q for p, q in self.cells)


def central_split(rs: RootSystem, E, levi):
    """(Z, zeta) with Z = 2 * (projection of E to the span of the coroots of l), zeta = E - Z/2."""
    base = levi.base if isinstance(levi, LeviSubsystem) else list(levi)
    if not base:
        raise ValueError("Levi subsystem must be nonempty")
    Z = solve_dual(rs, base, [2 * rs.evaluate(b, E) for b in base])
    assert all(Fraction(x).denominator == 1 for x in Z), "Z is not integral"
    Z = tuple(int(x) for x in Z)
    zeta = tuple(Fraction(e) - Fraction(z, 2) for e, z in zip(E, Z))
    return Z, zeta


def is_distinguished(rs: RootSystem, E, levi) -> bool:
    return is_distinguished_grading(rs, levi.root_indices, levi.base, E, scale=1)


def orbit_codim(spec, Z) -> int:
    """#{alpha : alpha(E) >= 1 and alpha(Z) - alpha(E) >= 1}."""
    Z = Z.Z if isinstance(Z, SL2Class) else Z
    rs, E = spec.rs, spec.E
    n = 0
    for a in rs.roots:
        p = rs.evaluate(a, E)
        if p >= 1 and rs.evaluate(a, Z) - p >= 1:
            n += 1
    return n


def levi_components(rs: RootSystem, levi):
    """[(CartanType, component base, component root indices)] for the simple factors of l."""
    out = []
    for ct, cb in decompose(rs, levi.base):
        idx = frozenset(k for k in levi.root_indices
                        if any(rs.form(rs.roots[k], b) != 0 for b in cb))
        out.append((ct, cb, idx))
    return out


def levi_real_form_labels(rs: RootSystem, E, levi) -> tuple:
    labels = []
    for ct, _, idx in levi_components(rs, levi):
        labels.append((ct.rank, real_form_of_subsystem(rs, idx, E, ct).name))
    labels.sort(key=lambda t: (-t[0], t[1]))
    return tuple(name for _, name in labels)


def w0_group(spec, cap=None):
    return parabolic_subgroup(spec.rs, spec.w0_generators, cap)


def canonical_levi(spec, indices) -> frozenset:
    """Lexicographically least root-index set in the W0-orbit."""
    rs = spec.rs
    perms = [rs.simple_reflection_perms[i] for i in spec.w0_generators]
    return min(orbit_of_set(perms, frozenset(indices)), key=lambda s: sorted(s))


def w0_orbit_grading(spec, Z) -> set:
    """W0-orbit of a grading element (s-coordinates)."""
    rs = spec.rs
    start = tuple(Z)
    seen = {start}
    stack = [start]
    while stack:
        c = stack.pop()
        for i in spec.w0_generators:
            d = rs.reflect_grading(c, i)
            if d not in seen:
                seen.add(d)
                stack.append(d)
    return seen


def make_class(spec, indices) -> SL2Class:
    rs, E = spec.rs, spec.E
    levi = LeviSubsystem(frozenset(indices), rs)
    if levi.root_indices:
        Z, zeta = central_split(rs, E, levi)
        labels = levi_real_form_labels(rs, E, levi)
    else:
        Z, zeta, labels = (0,) * rs.rank, tuple(Fraction(e) for e in E), ()
    return SL2Class(levi, Z, zeta, orbit_codim(spec, Z), labels, all(z == 0 for z in zeta))


def classify(spec: MTDomainSpec, include_trivial=False, cap=None) -> list:
    """One SL2Class per W0-class of distinguished Levis, sorted by (codim, canonical Levi)."""
    rs, E = spec.rs, spec.E
    w0_group(spec, cap)  # cap check on W0
    perms = [rs.simple_reflection_perms[i] for i in spec.w0_generators]
    seen, out = set(), []
    for levi in enumerate_levis(rs, cap):
        s = levi.root_indices
        if s in seen or (not s and not include_trivial):
            continue
        if not is_distinguished(rs, E, levi):
            continue
        orbit = orbit_of_set(perms, s)
        seen |= orbit
        canon = min(orbit, key=lambda x: sorted(x))
        out.append(make_class(spec, canon))
    out.sort(key=lambda c: (c.codim, sorted(c.levi.root_indices)))
    return out


def deligne_diamond(spec, cls, ws: WeightSystem = None, n: int = 0) -> DeligneDiamond:
    """cells(p,q) = sum of mult(mu) over mu(E) = p - n/2, mu(Z) = p + q - n."""
    rs, E = spec.rs, spec.E
    ws = adjoint_weight_system(rs) if ws is None else ws
    Z = cls.Z if isinstance(cls, SL2Class) else cls
    cells = {}
    for a, m in ws.root_coords():
        p = Fraction(rs.evaluate(a, E)) + Fraction(n, 2)
        s = Fraction(rs.evaluate(a, Z)) + n
        if p.denominator != 1 or s.denominator != 1:
            raise ValueError("non-integral Deligne placement for this (weight, grading, n)")
        key = (int(p), int(s - p))
        cells[key] = cells.get(key, 0) + m
    return DeligneDiamond(n, cells)


def admits_hodge_tate(spec, classes=None):
    classes = classify(spec) if classes is None else classes
    for c in classes:
        if c.is_hodge_tate:
            return True, c
    return False, None


def codim1_count(spec, classes=None) -> int:
    n = sum(spec.grading_coeffs)
    if classes is not None:
        assert n == sum(1 for c in classes if c.codim == 1)
    return n


def period_domain_ht_check(h, n=None) -> bool:
    """h^{n,0} <= h^{n-1,1} <= ... <= h^{n-m,m} with n in {2m, 2m+1}."""
    if isinstance(h, HodgeNumbers):
        n = h.n
        h = tuple(h.h.get(p, 0) for p in range(n, -1, -1))
    else:
        h = tuple(h)
        n = len(h) - 1 if n is None else n
    m = n // 2
    return all(h[i] <= h[i + 1] for i in range(m))


def format_grading(c, symbol="S") -> str:
    """ASCII rendering such as '2S^1 - S^2'; '0' for the zero element."""
    terms = []
    for i, x in enumerate(c):
        x = Fraction(x)
        if x == 0:
            continue
        mag = abs(x)
        coef = "" if mag == 1 else (str(mag) if mag.denominator == 1 else f"({mag})")
        terms.append(("-" if x < 0 else "+", f"{coef}{symbol}^{i + 1}"))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        s += f" {sign} {t}"
    return s


def format_root(a) -> str:
    """'s1+2s2' style rendering of a root in simple-root coordinates."""
    parts = []
    for i, x in enumerate(a):
        if x:
            parts.append((str(x) if abs(x) != 1 else ("-" if x < 0 else "")) + f"s{i + 1}")
    s = parts[0]
    for p in parts[1:]:
        s += p if p.startswith("-") else "+" + p
    return s

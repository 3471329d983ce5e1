"""Simple root systems in Bourbaki numbering, exact arithmetic throughout.

Roots are integer tuples in the simple-root basis.  A grading element is a
tuple of rationals ``c`` with ``sigma_i(E) = c_i`` (coefficients in the
basis S^1..S^r dual to the simple roots), so ``alpha(E) = sum a_i c_i``.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

WEYL_CAP_DEFAULT = 10**6
_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class SizeLimitError(RuntimeError):
    """A configured enumeration cap would be exceeded."""


def weyl_cap() -> int:
    env = os.environ.get("HODGE_SL2_WEYL_CAP")
    return int(env) if env else WEYL_CAP_DEFAULT


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_OK:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or not _RANK_OK[self.family](self.rank):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, s: str) -> "CartanType":
        s = s.strip().upper()
        if len(s) < 2 or not s[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {s!r}")
        return cls(s[0], int(s[1:]))

    @property
    def dimension(self) -> int:
        """dim g from the classical formulas."""
        n, f = self.rank, self.family
        if f == "A":
            return n * (n + 2)
        if f in "BC":
            return n * (2 * n + 1)
        if f == "D":
            return n * (2 * n - 1)
        return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[(f, n)]

    @property
    def weyl_order(self) -> int:
        n, f = self.rank, self.family
        if f == "A":
            return math.factorial(n + 1)
        if f in "BC":
            return 2**n * math.factorial(n)
        if f == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 2): 12}[(f, n)]


def _gram(ct: CartanType):
    """Symmetric form (sigma_i, sigma_j) on the simple roots."""
    n, f = ct.rank, ct.family
    B = [[Fraction(0)] * n for _ in range(n)]

    def edge(i, j, v):
        B[i][j] = B[j][i] = Fraction(v)

    if f in "AD" or f == "E":
        for i in range(n):
            B[i][i] = Fraction(2)
        if f == "A":
            for i in range(n - 1):
                edge(i, i + 1, -1)
        elif f == "D":
            for i in range(n - 2):
                edge(i, i + 1, -1)
            edge(n - 3, n - 1, -1)
        else:
            # 1-3-4-5-6-7-8 with 2 attached to 4
            for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]:
                if j < n:
                    edge(i, j, -1)
    elif f == "B":  # sigma_n short
        for i in range(n):
            B[i][i] = Fraction(2 if i < n - 1 else 1)
        for i in range(n - 1):
            edge(i, i + 1, -1)
    elif f == "C":  # sigma_n long
        for i in range(n):
            B[i][i] = Fraction(1 if i < n - 1 else 2)
        for i in range(n - 2):
            edge(i, i + 1, Fraction(-1, 2))
        edge(n - 2, n - 1, -1)
    elif f == "F":  # sigma_1, sigma_2 long
        for i, d in enumerate([2, 2, 1, 1]):
            B[i][i] = Fraction(d)
        edge(0, 1, -1)
        edge(1, 2, -1)
        edge(2, 3, Fraction(-1, 2))
    elif f == "G":  # sigma_1 short, sigma_2 long
        B[0][0], B[1][1] = Fraction(2), Fraction(6)
        edge(0, 1, -3)
    return B


def _neg(r):
    return tuple(-x for x in r)


class RootSystem:
    """Root system of a simple complex Lie algebra.

    ``roots`` lists the positive roots (by height, simple roots first, in
    Bourbaki order) followed by their negatives in the same order.
    """

    def __init__(self, ct: CartanType):
        self.type = ct
        self.rank = ct.rank
        self.gram = _gram(ct)
        r = self.rank
        self._igram = [[int(2 * x) for x in row] for row in self.gram]  # integral copy of 2*gram
        # cartan[i][j] = <sigma_i, sigma_j^vee>, so sigma_i = sum_j cartan[i][j] omega_j
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(r)]
                       for i in range(r)]
        self.positive = self._generate_positive()
        self.roots = self.positive + [_neg(a) for a in self.positive]
        self.index = {a: k for k, a in enumerate(self.roots)}
        self.npos = len(self.positive)

    def __repr__(self):
        return f"RootSystem({self.type})"

    # -- construction -------------------------------------------------------
    def _generate_positive(self):
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            a = queue.popleft()
            for i in range(r):
                b = self.reflect_root(a, i)
                if b not in seen and all(x >= 0 for x in b):
                    seen.add(b)
                    queue.append(b)
        return sorted(seen, key=lambda a: (sum(a), tuple(-x for x in a)))

    # -- data ---------------------------------------------------------------
    @cached_property
    def h_basis(self):
        """Coroots H^j as s-coordinates: sigma_i(H^j) = cartan[i][j]."""
        return [tuple(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)]

    @cached_property
    def highest_root(self):
        return self.positive[-1]

    def simple_index(self, i):
        return i  # simple roots occupy indices 0..r-1

    def _iform(self, a, b):
        g = self._igram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def form(self, a, b):
        return Fraction(self._iform(a, b), 2)

    def pair(self, a, b):
        """<a, b^vee> for a, b in root coordinates (b a root)."""
        return Fraction(2 * self._iform(a, b), self._iform(b, b))

    def coroot(self, b):
        """s-coordinates of b^vee: sigma_j(b^vee) = <sigma_j, b^vee>."""
        bb = self.form(b, b)
        return tuple(2 * sum(self.gram[j][k] * b[k] for k in range(self.rank)) / bb
                     for j in range(self.rank))

    @staticmethod
    def evaluate(a, c):
        """alpha(E) for root coordinates a and s-coordinates c."""
        return sum(x * y for x, y in zip(a, c))

    def reflect_root(self, a, i):
        m = sum(a[k] * self.cartan[k][i] for k in range(self.rank))
        if m == 0:
            return tuple(a)
        return tuple(x - m * (k == i) for k, x in enumerate(a))

    def reflect_by(self, a, b):
        """s_b(a) for roots (or any root-lattice vectors) a, b."""
        m = self.pair(a, b)
        return tuple(x - m * y for x, y in zip(a, b))

    def reflect_grading(self, c, i):
        """s_i acting on a grading element: sigma_j(s_i E) = c_j - c_i <sigma_j, sigma_i^vee>."""
        ci = c[i]
        if ci == 0:
            return tuple(c)
        return tuple(cj - ci * self.cartan[j][i] for j, cj in enumerate(c))

    def reflect_grading_by(self, c, b):
        m = self.evaluate(b, c)
        if m == 0:
            return tuple(c)
        bc = self.coroot(b)
        return tuple(cj - m * x for cj, x in zip(c, bc))

    def is_positive(self, k):
        return k < self.npos

    def neg_index(self, k):
        return k + self.npos if k < self.npos else k - self.npos

    # -- Weyl group ---------------------------------------------------------
    @cached_property
    def simple_reflection_perms(self):
        return [tuple(self.index[self.reflect_root(a, i)] for a in self.roots)
                for i in range(self.rank)]

    def weyl_group(self, cap=None):
        return enumerate_weyl(self, cap)

    # -- subsystems ---------------------------------------------------------
    def closure(self, gens) -> frozenset:
        """Root-index set of the subsystem generated by reflections in ``gens``."""
        gens = [self.roots[g] if isinstance(g, int) else tuple(g) for g in gens]
        found = set()
        queue = deque()
        for g in gens:
            for x in (g, _neg(g)):
                if x not in found:
                    found.add(x)
                    queue.append(x)
        while queue:
            a = queue.popleft()
            for g in gens:
                b = self.reflect_by(a, g)
                b = tuple(int(x) for x in b)
                if b not in found:
                    found.add(b)
                    queue.append(b)
        return frozenset(self.index[a] for a in found)

    def standard_levi(self, subset) -> frozenset:
        return self.closure(list(subset)) if subset else frozenset()


@dataclass
class WeylGroup:
    rs: RootSystem
    elements: list  # permutations of root indices, breadth-first (shortlex) order
    words: list     # reduced words (tuples of simple reflection indices)

    def __len__(self):
        return len(self.elements)

    @cached_property
    def longest(self):
        n = self.rs.npos
        for w in reversed(self.elements):
            if all(w[k] >= n for k in range(n)):
                return w
        raise AssertionError("no longest element")


def enumerate_weyl(rs: RootSystem, cap=None) -> WeylGroup:
    """Breadth-first enumeration of W as permutations of the root set."""
    cap = weyl_cap() if cap is None else cap
    order = rs.type.weyl_order
    if order > cap:
        raise SizeLimitError(f"|W({rs.type})| = {order} exceeds the Weyl cap {cap}")
    return _generated_group(rs, range(rs.rank))


def _generated_group(rs, gens):
    gens = list(gens)
    perms = rs.simple_reflection_perms
    ident = tuple(range(len(rs.roots)))
    elements, words = [ident], [()]
    seen = {ident}
    k = 0
    while k < len(elements):
        w, word = elements[k], words[k]
        for i in gens:
            s = perms[i]
            v = tuple(w[s[x]] for x in range(len(s)))  # w * s_i
            if v not in seen:
                seen.add(v)
                elements.append(v)
                words.append(word + (i,))
        k += 1
    return WeylGroup(rs, elements, words)


def parabolic_subgroup(rs: RootSystem, gens, cap=None) -> WeylGroup:
    """Subgroup of W generated by the simple reflections in ``gens``."""
    gens = sorted(gens)
    order = 1
    if gens:
        for comp in _components_of_simple(rs, gens):
            order *= comp.weyl_order
    cap = weyl_cap() if cap is None else cap
    if order > cap:
        raise SizeLimitError(f"|W0| = {order} exceeds the Weyl cap {cap}")
    return _generated_group(rs, gens)


def _components_of_simple(rs, subset):
    base = [rs.roots[i] for i in subset]
    return [t for t, _ in decompose(rs, base)]


def orbit_of_set(perms, s: frozenset) -> set:
    """Orbit of a root-index set under the group generated by ``perms``."""
    seen = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for p in perms:
            y = frozenset(p[k] for k in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@dataclass(frozen=True)
class LeviSubsystem:
    """A Levi sub-root-system, stored as a set of root indices."""
    root_indices: frozenset
    rs: RootSystem = field(compare=False, repr=False, hash=False)

    @cached_property
    def base(self):
        return subsystem_base(self.rs, self.root_indices)

    @cached_property
    def component_types(self):
        return identify_type(self.rs, self.base)

    @property
    def rank(self):
        return len(self.base)

    def key(self):
        return tuple(sorted(self.root_indices))

    def __len__(self):
        return len(self.root_indices)


def enumerate_levis(rs: RootSystem, cap=None) -> list:
    """All subsystems w(Delta_{S'}) for w in W and S' a subset of S.

    Orbits are taken by breadth-first search over simple reflections; the
    Weyl-cap check is kept so that huge types fail loudly.
    """
    enumerate_weyl_check(rs, cap)
    perms = rs.simple_reflection_perms
    out = set()
    for k in range(rs.rank + 1):
        for sub in combinations(range(rs.rank), k):
            start = rs.standard_levi(sub)
            if start in out:
                continue
            out |= orbit_of_set(perms, start)
    return [LeviSubsystem(s, rs) for s in sorted(out, key=lambda s: (len(s), sorted(s)))]


def enumerate_weyl_check(rs, cap=None):
    cap = weyl_cap() if cap is None else cap
    if rs.type.weyl_order > cap:
        raise SizeLimitError(f"|W({rs.type})| = {rs.type.weyl_order} exceeds the Weyl cap {cap}")


def subsystem_base(rs: RootSystem, indices) -> list:
    """Positive elements of the subsystem that are not a sum of two positive elements."""
    idx = set(indices)
    for k in idx:
        if rs.neg_index(k) not in idx:
            raise ValueError("subsystem is not closed under negation")
    pos = sorted(k for k in idx if rs.is_positive(k))
    posroots = {rs.roots[k] for k in pos}
    base = []
    for k in pos:
        a = rs.roots[k]
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in posroots for b in posroots if b != a)
        if not decomposable:
            base.append(a)
    return base


def decompose(rs: RootSystem, base):
    """Split a base into connected components and identify each one.

    Returns a list of (CartanType, component base) pairs ordered by the
    position of the first root of each component in ``base``.
    """
    base = [tuple(b) for b in base]
    n = len(base)
    adj = [[j for j in range(n) if j != i and rs.form(base[i], base[j]) != 0] for i in range(n)]
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        comp, stack = [], [i]
        seen.add(i)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comp.sort()
        cb = [base[x] for x in comp]
        comps.append((_identify_component(rs, cb), cb))
    return comps


def identify_type(rs: RootSystem, base) -> list:
    return [t for t, _ in decompose(rs, base)]


def _identify_component(rs, base):
    k = len(base)
    if k == 1:
        return CartanType("A", 1)
    A = [[rs.pair(a, b) for b in base] for a in base]
    for i in range(k):
        if A[i][i] != 2:
            raise ValueError("not a base")
    bonds = {}
    for i in range(k):
        for j in range(i + 1, k):
            m = A[i][j] * A[j][i]
            if m not in (0, 1, 2, 3):
                raise ValueError("Gram structure matches no finite type")
            if m:
                bonds[(i, j)] = m
    deg = [sum(1 for e in bonds if i in e) for i in range(k)]
    if len(bonds) != k - 1:
        raise ValueError("Gram structure matches no finite type")
    mults = sorted(bonds.values())
    if 3 in mults:
        if k != 2:
            raise ValueError("Gram structure matches no finite type")
        return CartanType("G", 2)
    lengths = [rs.form(a, a) for a in base]
    if 2 in mults:
        if mults.count(2) != 1 or max(deg) > 2:
            raise ValueError("Gram structure matches no finite type")
        (i, j), = [e for e, m in bonds.items() if m == 2]
        if k == 4 and deg[i] == 2 and deg[j] == 2:
            return CartanType("F", 4)
        short = min(lengths)
        nshort = sum(1 for x in lengths if x == short)
        if k == 2:
            return CartanType("C" if rs.type.family == "C" else "B", 2)
        if nshort == 1:
            return CartanType("B", k)
        if nshort == k - 1:
            return CartanType("C", k)
        raise ValueError("Gram structure matches no finite type")
    if max(deg) <= 2:
        return CartanType("A", k)
    branch = [i for i in range(k) if deg[i] == 3]
    if len(branch) != 1 or max(deg) > 3:
        raise ValueError("Gram structure matches no finite type")
    b = branch[0]
    nbr = {i: [j for j in range(k) if (min(i, j), max(i, j)) in bonds] for i in range(k)}
    arms = []
    for start in nbr[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [x for x in nbr[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return CartanType("D", k)
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return CartanType("E", k)
    raise ValueError("Gram structure matches no finite type")


_CACHE = {}


def build_root_system(ct) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    if ct not in _CACHE:
        _CACHE[ct] = RootSystem(ct)
    return _CACHE[ct]

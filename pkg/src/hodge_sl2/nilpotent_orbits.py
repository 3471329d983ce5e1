"""Complex nilpotent orbits: characteristic vectors, partitions, Jacobson-Morosov sets."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import sympy

from .root_system import RootSystem, enumerate_weyl_check


def partition_char_vector(d):
    """Characteristic vector of the nilpotent orbit of sl_n with Jordan type ``d``."""
    h = []
    for di in d:
        h.extend(range(di - 1, -di, -2))
    h.sort(reverse=True)
    return tuple(h[i] - h[i + 1] for i in range(len(h) - 1))


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def dominant(rs: RootSystem, c):
    """W-dominant representative of a grading element (first-negative policy)."""
    c = tuple(c)
    while True:
        for i, ci in enumerate(c):
            if ci < 0:
                c = rs.reflect_grading(c, i)
                break
        else:
            return c


def solve_dual(rs: RootSystem, base, target):
    """Coefficients y with Y = sum_b y_b b^vee and beta_a(Y) = target_a; returns Y in s-coordinates."""
    if not base:
        return (Fraction(0),) * rs.rank
    A = sympy.Matrix([[sympy.Rational(rs.pair(a, b)) for b in base] for a in base])
    y = A.LUsolve(sympy.Matrix([sympy.Rational(t) for t in target]))
    ys = [Fraction(int(v.p), int(v.q)) for v in y]
    cor = [rs.coroot(b) for b in base]
    return tuple(sum(ys[k] * cor[k][j] for k in range(len(base))) for j in range(rs.rank))


def is_distinguished_grading(rs: RootSystem, indices, base, Y, scale=1):
    """rank + #{alpha(Y)=0} == #{alpha(Y)=scale} over the roots of the subsystem."""
    zero = top = 0
    for k in indices:
        v = rs.evaluate(rs.roots[k], Y)
        if v == 0:
            zero += 1
        elif v == scale:
            top += 1
    return len(base) + zero == top


def enumerate_char_vectors(rs: RootSystem, cap=None) -> set:
    """Characteristic vectors of all nilpotent orbits, via distinguished parabolics of Levis."""
    enumerate_weyl_check(rs, cap)
    out = set()
    r = rs.rank
    for k in range(r + 1):
        for sub in combinations(range(r), k):
            base = [rs.roots[i] for i in sub]
            indices = rs.standard_levi(sub)
            for j in range(k + 1):
                for marked in combinations(range(k), j):
                    target = [2 if t in marked else 0 for t in range(k)]
                    Y = solve_dual(rs, base, target)
                    if is_distinguished_grading(rs, indices, base, Y, scale=2):
                        v = dominant(rs, Y)
                        assert all(x.denominator == 1 for x in map(Fraction, v))
                        out.add(tuple(int(x) for x in v))
    return out


def jm_parabolic_classes(rs: RootSystem, vectors=None) -> set:
    vectors = enumerate_char_vectors(rs) if vectors is None else vectors
    return {frozenset(i + 1 for i, x in enumerate(v) if x) for v in vectors if any(v)}


def is_even_jm(rs: RootSystem, I, vectors=None) -> bool:
    """I uses 1-based simple-root indices."""
    I = set(I)
    if not I:
        raise ValueError("index set must be nonempty")
    vectors = enumerate_char_vectors(rs) if vectors is None else vectors
    return tuple(2 if i + 1 in I else 0 for i in range(rs.rank)) in vectors


def even_jm_classes(rs: RootSystem, vectors=None) -> set:
    vectors = enumerate_char_vectors(rs) if vectors is None else vectors
    return {I for I in jm_parabolic_classes(rs, vectors) if is_even_jm(rs, I, vectors)}


def jm_filtration_dims(ws, Y) -> dict:
    """level -> dim W_level = sum of Y-eigenspace dimensions at levels <= level."""
    rs = ws.rs
    levels = {}
    for a, m in ws.root_coords():
        v = rs.evaluate(a, Y)
        assert Fraction(v).denominator == 1, "Y must be integral on weights"
        levels[int(v)] = levels.get(int(v), 0) + m
    out, acc = {}, 0
    for l in sorted(levels):
        acc += levels[l]
        out[l] = acc
    return out

import re
from itertools import product

import pytest

from hodge_sl2.real_forms import (compact_characteristic_vector, compact_simple_system,
                                  identify_real_form, split_roots)
from hodge_sl2.root_system import build_root_system

from reference_tables import REAL_FORMS

EXCEPTIONAL_DIM_K = {"EII": 38, "EIII": 46, "EV": 63, "EVI": 69, "EVII": 79, "EVIII": 120,
                     "EIX": 136, "FI": 24, "FII": 36, "G": 6}


def dim_k_from_name(name):
    """dim of the maximal compact subalgebra read off the name of the real form."""
    if name in EXCEPTIONAL_DIM_K:
        return EXCEPTIONAL_DIM_K[name]
    fam, a, b = re.fullmatch(r"(su|so|sp|so\*)\((\d+),?(\d+|R)?\)", name).groups()
    a = int(a)
    if fam == "su":
        b = int(b)
        return a * a + b * b - 1
    if fam == "so":
        b = int(b)
        return a * (a - 1) // 2 + b * (b - 1) // 2
    if fam == "so*":
        return (a // 2) ** 2
    if b == "R":
        return a * a
    b = int(b)
    return a * (2 * a + 1) + b * (2 * b + 1)


def gradings(rank):
    return [E for E in product((0, 1), repeat=rank) if any(E)]


@pytest.mark.parametrize("t, I, name", REAL_FORMS)
def test_real_form_table(t, I, name):
    rs = build_root_system(t)
    E = tuple(int(i + 1 in I) for i in range(rs.rank))
    assert identify_real_form(rs, E).name == name


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                               "D4", "D5", "G2", "F4", "E6", "E7"])
def test_dim_k_two_ways(t):
    rs = build_root_system(t)
    for E in gradings(rs.rank):
        lab = identify_real_form(rs, E)
        assert lab.dim_k + lab.dim_p == rs.type.dimension
        assert lab.dim_k == dim_k_from_name(lab.name), (E, lab)


def test_compact_roots_closed():
    rs = build_root_system("F4")
    for E in gradings(4):
        par = split_roots(rs, E)
        assert par.compact | par.noncompact == frozenset(range(len(rs.roots)))
        for i in par.compact:
            for j in par.compact:
                s = tuple(x + y for x, y in zip(rs.roots[i], rs.roots[j]))
                if s in rs.index:
                    assert rs.index[s] in par.compact


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "E6", "F4"])
def test_hermitian_detection(t):
    rs = build_root_system(t)
    for i in range(rs.rank):
        E = tuple(int(j == i) for j in range(rs.rank))
        lab = identify_real_form(rs, E)
        assert (lab.center == 1) == (rs.highest_root[i] == 1)


def test_full_names():
    rs = build_root_system("F4")
    assert identify_real_form(rs, (1, 0, 0, 0)).full_name == "FI = F4(4)"
    assert identify_real_form(rs, (0, 0, 0, 1)).name == "FII"
    assert identify_real_form(build_root_system("A1"), (1,)).name == "su(1,1)"


def test_non_bracket_generating_rejected():
    with pytest.raises(ValueError):
        identify_real_form(build_root_system("B2"), (2, 0))


def test_a2_compact_system():
    rs = build_root_system("A2")
    kbase, ap, word = compact_simple_system(rs, (1, 1))
    assert kbase == [(1, 1)] and ap == (-1, 0) and word == (0,)


@pytest.mark.parametrize("Z, expected", [((2, -1), ((1,), -2)), ((-1, 2), ((1,), 1))])
def test_a2_borel_ccv(Z, expected):
    v = compact_characteristic_vector(build_root_system("A2"), (1, 1), Z)
    assert (v.gamma, v.alpha_prime_value) == expected


def test_ccv_wk_invariant():
    rs = build_root_system("C3")
    E = (1, 0, 1)
    kbase, _, _ = compact_simple_system(rs, E)
    Z = (2, -2, 2)
    ref = compact_characteristic_vector(rs, E, Z)
    for b in kbase:
        assert compact_characteristic_vector(rs, E, rs.reflect_grading_by(Z, b)) == ref
    assert all(g >= 0 for g in ref.gamma)


def test_split_roots_examples():
    rs = build_root_system("B2")
    par = split_roots(rs, (1, 0))
    assert {rs.roots[k] for k in par.compact} == {(0, 1), (0, -1)} and len(par.noncompact) == 6
    assert split_roots(rs, (0, 0)).noncompact == frozenset()
    g2 = build_root_system("G2")
    assert identify_real_form(g2, (1, 1)).k_type == ("A1", "A1")


@pytest.mark.parametrize("p, q", [(1, 2), (2, 2), (2, 3), (1, 4)])
def test_su_pq_compact_system(p, q):
    rs = build_root_system(f"A{p + q - 1}")
    E = tuple(int(i + 1 == p) for i in range(rs.rank))
    kbase, ap, _ = compact_simple_system(rs, E)
    simple = [rs.roots[i] for i in range(rs.rank)]
    assert set(kbase) == set(simple) - {simple[p - 1]}
    assert ap == simple[p - 1]
    assert identify_real_form(rs, E).name == f"su({max(p, q)},{min(p, q)})"


def test_hermitian_compact_base_is_simple():
    rs = build_root_system("B2")
    kbase, _, _ = compact_simple_system(rs, (1, 0))
    assert set(kbase) <= {rs.roots[0], rs.roots[1]}


def test_ccv_zero():
    v = compact_characteristic_vector(build_root_system("A2"), (1, 1), (0, 0))
    assert v.gamma == (0,) and v.alpha_prime_value == 0

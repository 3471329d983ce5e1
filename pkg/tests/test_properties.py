"""Structural invariants of the classification, checked on random and exhaustive domains."""
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hodge_sl2.rep_weights import adjoint_weight_system, hodge_numbers, weight_system
from hodge_sl2.root_system import build_root_system
from hodge_sl2.sl2_classifier import (MTDomainSpec, admits_hodge_tate, canonical_levi, classify,
                                      codim1_count, deligne_diamond, period_domain_ht_check,
                                      w0_orbit_grading)

from reference_tables import TABLES

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4"]


@st.composite
def domains(draw, types=TYPES):
    t = draw(st.sampled_from(types))
    r = int(t[1:])
    E = draw(st.lists(st.integers(0, 1), min_size=r, max_size=r).filter(any))
    return MTDomainSpec(t, tuple(E))


def check_invariants(spec):
    rs, E = spec.rs, spec.E
    classes = classify(spec)
    adj = adjoint_weight_system(rs)
    assert codim1_count(spec, classes) == sum(E)
    for c in classes:
        # Z is integral and doubles E on the Levi
        assert all(isinstance(z, int) for z in c.Z)
        for k in c.levi.root_indices:
            a = rs.roots[k]
            assert rs.evaluate(a, c.Z) == 2 * rs.evaluate(a, E)
        assert all(Fraction(z) == e - Fraction(zz, 2) for z, e, zz in zip(c.zeta, E, c.Z))
        # canonical representative of its W0-class
        assert canonical_levi(spec, c.levi.root_indices) == c.levi.root_indices
        d = deligne_diamond(spec, c, adj, 0)
        assert d.dim == rs.type.dimension
        assert all(d.cells.get((q, p)) == m for (p, q), m in d.cells.items())
        assert c.is_hodge_tate == d.is_diagonal()
        # codim is the dimension of the positive quadrant of the adjoint splitting
        assert c.codim == sum(m for (p, q), m in d.cells.items() if p > 0 and q > 0)
    # no two classes share a W0-orbit of Z together with a W0-orbit of Levis
    assert len({c.levi.root_indices for c in classes}) == len(classes)
    return classes


@settings(max_examples=60, deadline=None)
@given(spec=domains())
def test_random_domains(spec):
    check_invariants(spec)


@pytest.mark.parametrize("key", TABLES)
def test_table_domains(key):
    t, I, *_ = TABLES[key]
    check_invariants(MTDomainSpec.from_indices(t, I))


@settings(max_examples=30, deadline=None)
@given(spec=domains(["B2", "B3", "C3", "G2", "D4"]), data=st.data())
def test_diamond_symmetry_any_rep(spec, data):
    rs = spec.rs
    lam = tuple(data.draw(st.lists(st.integers(0, 1), min_size=rs.rank, max_size=rs.rank)))
    ws = weight_system(rs, lam)
    top = max(rs.evaluate(a, spec.E) for a, _ in ws.root_coords())
    n = int(2 * top)
    for c in classify(spec):
        d = deligne_diamond(spec, c, ws, n)
        assert d.dim == ws.dim
        assert all(d.cells.get((q, p)) == m for (p, q), m in d.cells.items())
        assert all(0 <= p <= n and 0 <= q <= n for p, q in d.cells) or n == 0


@settings(max_examples=40, deadline=None)
@given(spec=domains(["A3", "B3", "C3", "G2", "F4"]))
def test_classification_w0_invariant(spec):
    """Every W0-conjugate of a class's Z lands in the same classification row."""
    classes = classify(spec)
    for c in classes:
        orbit = w0_orbit_grading(spec, c.Z)
        others = [o for o in classes if o is not c]
        assert all(o.Z not in orbit for o in others)


def _standard_weight(t, E):
    rs = build_root_system(t)
    ws = weight_system(rs, (1,) + (0,) * (rs.rank - 1))
    return ws, int(2 * max(rs.evaluate(a, E) for a, _ in ws.root_coords()))


def _pdht_cases():
    """Orthogonal groups in even weight, symplectic groups in odd weight."""
    out = []
    for t in ["B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5"]:
        r = int(t[1:])
        for E in product((0, 1), repeat=r):
            if any(E) and (_standard_weight(t, E)[1] % 2 == 1) == (t[0] == "C"):
                out.append((t, E))
    return out


PDHT_CASES = _pdht_cases()


def test_period_domain_case_count():
    assert len(PDHT_CASES) == 61


@pytest.mark.parametrize("t, E", PDHT_CASES)
def test_period_domain_agreement(t, E):
    """Standard representation of a classical group: both Hodge-Tate criteria agree."""
    spec = MTDomainSpec(t, E)
    ws, n = _standard_weight(t, E)
    h = hodge_numbers(ws, E, n)
    assert admits_hodge_tate(spec)[0] == period_domain_ht_check(h)

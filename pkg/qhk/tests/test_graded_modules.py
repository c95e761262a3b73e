# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest
from hypothesis import given, settings, strategies as st

from .. import graded_modules as gm
from ..core_algebra import parse_presentation, build_algebra
from ..fixtures import CATO
from ..exceptions import DualityMissingError

_cache = {}


def cato():
    if 'cato' not in _cache:
        _cache['cato'] = build_algebra(parse_presentation(CATO))
    return _cache['cato']


def modules(alg):
    out = []
    for i in range(1, alg.r + 1):
        out.append(gm.projective(alg, i))
        out.append(gm.simple(alg, i))
    out.append(gm.injective(alg, 2, 1))
    return out


def test_projective_and_simple():
    alg = cato()
    P3 = gm.projective(alg, 3)
    assert P3.dim == 3
    assert sorted(P3.slots) == [(1, 2), (2, 1), (3, 0)]
    assert P3.label == 'P_3'
    assert gm.projective(alg, 2, 1).label == 'P_2<1>'
    assert P3.check_relations() is None
    S = gm.simple(alg, 2, -1)
    assert S.slots == [(2, -1)] and S.label == 'S_2<-1>'
    with pytest.raises(ValueError):
        gm.projective(alg, 4)


def test_layers_socle_top():
    alg = cato()
    P1, P3 = gm.projective(alg, 1), gm.projective(alg, 3)
    assert gm.radical_layers(P3) == [{3: 1}, {2: 1}, {1: 1}]
    assert gm.radical_layers(P1) == [{1: 1}, {2: 1}, {1: 1, 3: 1}, {2: 1}, {1: 1}]
    assert gm.socle_slots(P3) == {(1, 2): 1}
    assert gm.socle_slots(P1) == {(1, 4): 1}
    assert gm.top(P1) == {(1, 0): 1}
    assert gm.composition_factors(P1) == {1: 3, 2: 2, 3: 1}
    assert len(gm.radical(P1)) == 5


def test_submodule_quotient():
    alg = cato()
    P1 = gm.projective(alg, 1)
    alpha = [k for k in range(P1.dim) if P1.slots[k] == (2, 1)]
    U = gm.generated_submodule(P1, [P1.unit(alpha[0])])
    assert len(U) == 5
    sub = gm.submodule(P1, U)
    assert sub.dim == 5 and sub.check_relations() is None
    Q = gm.quotient(P1, U, label='top')
    assert Q.slots == [(1, 0)] and Q.label == 'top'
    assert Q.check_relations() is None
    row = sub.rows[0]
    assert sub.include({0: alg.field.one}) == row


def test_direct_sum_and_shift():
    alg = cato()
    M = gm.direct_sum([gm.projective(alg, 3), gm.simple(alg, 1)])
    assert M.dim == 4 and M.label == 'P_3 + S_1'
    assert M.check_relations() is None
    N = gm.projective(alg, 3).shift(2)
    assert N.label == 'P_3<2>'
    assert sorted(N.degrees()) == [2, 3, 4]
    with pytest.raises(ValueError):
        gm.direct_sum([])


def test_relation_violation():
    alg = cato()
    one = alg.field.one
    # beta_o then beta acting nonzero breaks beta.beta_o = 0
    M = gm.GradedModule(alg, [(3, 0), (2, 1), (3, 2)], {'beta_o': {0: {1: one}}, 'beta': {1: {2: one}}})
    assert M.check_relations() == ('beta.beta_o', 0)


def test_dualize_and_injective():
    alg = cato()
    P3 = gm.projective(alg, 3)
    D = gm.dualize(P3)
    assert sorted(D.slots) == [(1, -2), (2, -1), (3, 0)]
    assert D.label == 'P_3^o'
    assert gm.dualize(D).label == 'P_3'
    assert D.check_relations() is None
    I = gm.injective(alg, 3)
    assert I.label == 'I_3'
    assert gm.socle_slots(I) == {(3, 0): 1}
    trunc = build_algebra(parse_presentation("vertices: 1\narrow x 1 1\nrelation x.x\n"))
    with pytest.raises(DualityMissingError, match='no duality'):
        gm.dualize(gm.projective(trunc, 1))


def test_hom_space():
    alg = cato()
    P1, P3 = gm.projective(alg, 1), gm.projective(alg, 3)
    # P_3 -> P_1<j> picks an element of e_3 P_1 in degree -j
    assert gm.graded_hom(P3, P1, -2).dim == 1
    assert gm.graded_hom(P3, P1, 0).dim == 0
    H = gm.graded_hom(P1, P1, 0)
    assert H.dim == 1
    f = H.basis[0]
    assert H.apply(f, P1.unit(0)) == {0: f[0][0]}
    assert H.to_dict()['dim'] == 1


@settings(deadline=None, max_examples=30)
@given(st.integers(1, 3), st.integers(0, 6), st.integers(-4, 4))
def test_hom_from_projective(i, m, j):
    alg = cato()
    M = modules(alg)[m]
    assert gm.graded_hom(gm.projective(alg, i), M, j).dim == len(M.indices(vertex=i, degree=-j))


@settings(deadline=None, max_examples=30)
@given(st.integers(0, 6), st.integers(0, 6), st.integers(-3, 3))
def test_duality_contravariant(m, n, j):
    alg = cato()
    mods = modules(alg)
    M, N = mods[m], mods[n]
    assert gm.graded_hom(M, N, j).dim == gm.graded_hom(gm.dualize(N), gm.dualize(M), j).dim

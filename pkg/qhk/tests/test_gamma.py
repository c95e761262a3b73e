# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest

from .. import gamma as gm
from ..core_algebra import parse_presentation
from ..delta_koszul import HeightFunction
from ..fixtures import registry
from ..exceptions import GammaError, GradingError


def test_cato_gamma(analyses):
    a = analyses.analysis('CATO')
    G = a.gamma
    assert G.dim == 9
    assert G.dims() == [6, 3]
    assert G.to_dict()['basis'][:3] == ['e1', 'e2', 'e3']
    assert G.slot_dims()[(1, 2, 1)] == 1
    assert G.associativity_defect() is None


def test_identities(analyses):
    G = analyses.analysis('CATO').gamma
    one = G.field.one
    for b in G.basis:
        assert G.mult(G.identity[b.target], b.index) == {b.index: one}
        assert G.mult(b.index, G.identity[b.source]) == {b.index: one}
    e1, e2 = G.identity[1], G.identity[2]
    assert G.mult(e1, e2) == {}


def test_regraded(analyses):
    a = analyses.analysis('CATO')
    Gh = a.gamma.regraded(a.h)
    assert Gh.grading_tag == 'h'
    assert Gh.dims() == [3, 4, 2]
    assert gm.h_regrade_gamma(a.gamma, a.h).dims() == [3, 4, 2]
    flipped = HeightFunction({1: 2, 2: 1, 3: 0}, [[1, 2, 3]])
    with pytest.raises(GammaError):
        a.gamma.regraded(flipped)
    assert not gm.check_directed(a.gamma, flipped)
    v = gm.check_directed(a.gamma, a.h)
    assert v and [1, 2] in v.details['nonzero_pairs']


def test_cato_presentation(analyses):
    a = analyses.analysis('CATO')
    pres = a.pres
    assert pres.r == 3
    assert len(pres.arrows) == 4 and len(pres.relations) == 2
    assert sorted(pres.degrees.values()) == [0, 0, 1, 1]
    assert sorted(set(pres.arrows.values())) == [(2, 1), (3, 2)]
    assert all(len(rel[0][1]) == 2 for rel in pres.relations)
    v = gm.check_presentation(a.gamma, pres)
    assert v and v.value.dim == 9
    ref, degs = registry.gamma_reference('CATO')
    assert gm.match_relation_space(pres, ref, degs)
    other, other_degs = registry.gamma_reference('PARA')
    m = gm.match_relation_space(pres, other, other_degs)
    assert not m and m.certificate['reason']


def test_presentation_text(analyses):
    a = analyses.analysis('CATO')
    order = gm.gamma_order(a.h, 3)
    assert order == [3, 2, 1]
    text = a.pres.to_text(order=order, header='Gamma of CATO')
    assert text.startswith('# Gamma of CATO\n# ext degrees: ')
    p = parse_presentation(text)
    assert p.order == [3, 2, 1]
    assert len(p.arrows) == 4 and len(p.relations) == 2
    d = a.pres.to_dict()
    assert d['vertices'] == 3 and len(d['arrows']) == 4


def test_gamma_algebra_gradings(analyses):
    a = analyses.analysis('CATO')
    ext = gm.gamma_algebra(a.gamma, a.pres)
    assert ext.grading_tag == 'ext' and ext.dims() == [6, 3]
    with pytest.raises(GradingError):
        gm.gamma_algebra(a.gamma, a.pres, grading='h')
    with pytest.raises(GradingError, match='unknown grading'):
        gm.gamma_algebra(a.gamma, a.pres, grading='length')


def test_gamma_koszul_and_double_dual(analyses):
    a = analyses.analysis('CATO')
    v = gm.check_gamma_classical_koszul(a.gamma, a.pres, a.h)
    assert v
    assert v.value.grading_tag == 'h' and v.details['dims'] == [3, 4, 2]
    d = gm.double_dual_dims(a.dalg, a.gamma, a.pres, a.dfamily)
    assert d
    assert d.details['ext_dims'] == [6, 5, 3]
    assert d.details['delta_dims'] == [6, 5, 3]


def test_dual_delta_module(analyses):
    a = analyses.analysis('CATO')
    galg = gm.gamma_algebra(a.gamma, a.pres)
    X = gm.dual_delta_module(galg, a.gamma, a.pres, a.dfamily)
    assert X.dim == 6
    assert X.degrees() == [0]
    assert X.check_relations() is None


def test_so4_gamma(analyses):
    a = analyses.analysis('SO4')
    assert a.gamma.dim == 16
    assert a.gamma.regraded(a.h).dims() == [4, 8, 4]
    assert len(a.pres.relations) == 4
    ref, degs = registry.gamma_reference('SO4')
    assert gm.match_relation_space(a.pres, ref, degs)


def test_so4_ext1_arrows_anticommute(analyses):
    # commuting square of Ext^1 arrows is not equivalent to the anticommuting one
    pres = analyses.analysis('SO4').pres
    ref, degs = registry.gamma_reference('SO4')
    assert 'alpha_c.gamma_c + beta_c.delta_c' in ref
    commuting = ref.replace('alpha_c.gamma_c + beta_c.delta_c', 'alpha_c.gamma_c - beta_c.delta_c')
    v = gm.match_relation_space(pres, commuting, degs)
    assert not v
    assert v.certificate['reason'] == 'coefficients are not related by rescaling arrows'


@pytest.mark.parametrize('name', ['CATO', 'PARA', 'SO4', 'DUALEXT'])
def test_associative(analyses, name):
    assert analyses.analysis(name).gamma.associativity_defect() is None


def test_para_gamma(analyses):
    a = analyses.analysis('PARA')
    ref, degs = registry.gamma_reference('PARA')
    assert gm.match_relation_space(a.pres, ref, degs)
    assert gm.check_gamma_classical_koszul(a.gamma, a.pres, a.h)


def test_dualext_gamma(analyses):
    a = analyses.analysis('DUALEXT')
    G, pres = a.gamma, a.pres
    assert G.dim == 6
    assert pres.relations == []
    assert list(pres.arrows.values()) == [(2, 1)] * 4
    assert G.regraded(a.h).dims() == [2, 4]
    assert gm.double_dual_dims(a.dalg, G, pres, a.dfamily).details['ext_dims'] == [4, 6]

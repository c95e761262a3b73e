# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest

from .. import delta_koszul as dk
from ..core_algebra import build_algebra, parse_presentation
from ..graded_modules import projective, socle_slots
from ..quasi_hereditary import standard_family
from ..gamma import build_gamma
from ..fixtures import registry
from ..exceptions import GradingError

_cache = {}


def setup(name):
    """(alg, family, h, dalg) for a fixture that passes condition (H)."""
    if name not in _cache:
        alg = build_algebra(registry.presentation(name))
        fam = standard_family(alg)
        h = dk.find_height_function(alg, fam).value
        dalg = dk.delta_regrade(alg, h) if h is not None else None
        _cache[name] = (alg, fam, h, dalg)
    return _cache[name]


def test_height_function_object():
    h = dk.HeightFunction({1: 3, 2: 4, 3: 7, 4: 9}, [[1, 2], [3, 4]])
    n = h.normalized()
    assert n.as_list() == [0, 1, 0, 2]
    assert n.to_dict() == {'1': 0, '2': 1, '3': 0, '4': 2}
    assert h.shifted(1, component=1).as_list() == [3, 4, 8, 10]
    assert h.shifted(-3).normalized() == n
    assert n != h
    assert n[4] == 2


def test_components():
    alg = build_algebra(registry.presentation('CATO+DUALEXT'))
    assert dk.quiver_components(alg) == [[1, 2, 3], [4, 5]]
    h, cert = dk.propagate_heights(alg)
    assert cert is None
    assert h.as_list() == [0, 1, 2, 0, 1]


def test_cato_height():
    alg, fam, h, dalg = setup('CATO')
    assert h.as_list() == [0, 1, 2]
    assert dk.check_condition_H(alg, h, fam)
    assert dk.delta_arrow_degrees(alg, h) == {'alpha': 1, 'alpha_o': 0, 'beta': 1, 'beta_o': 0}
    v = dk.find_height_function(alg, fam)
    assert v.details['condition_H'] and v.details['components'] == [[1, 2, 3]]


def test_condition_H_violation():
    alg, fam, h, dalg = setup('CATO')
    bad = dk.HeightFunction({1: 0, 2: 2, 3: 4}, [[1, 2, 3]])
    v = dk.check_condition_H(alg, bad, fam)
    assert not v
    assert v.certificate == {'standard': 2, 'degree': 1, 'vertex': 1, 'multiplicity': 1,
                             'h_i': 0, 'h_j_minus_l': 1}


def test_odd_cycle():
    alg = build_algebra(registry.presentation('ODDCYCLE'))
    fam = standard_family(alg)
    h, cert = dk.propagate_heights(alg)
    assert h is None
    assert cert['odd'] and cert['defect'] == 1
    assert len(cert['claims']) == 2
    v = dk.find_height_function(alg, fam)
    assert not v and v.value is None
    assert dk.exhaustive_heights(alg, fam) == []
    assert not dk.height_uniqueness(alg, fam)


def test_loop_has_no_height():
    alg = build_algebra(parse_presentation("vertices: 1\narrow x 1 1\nrelation x.x\n"))
    h, cert = dk.propagate_heights(alg)
    assert h is None and cert['reason'] == 'loop'


def test_exhaustive_agrees():
    alg, fam, h, dalg = setup('CATO')
    sols = dk.exhaustive_heights(alg, fam, bound=9)
    assert len(sols) == 8
    assert all(s.normalized() == h for s in sols)
    v = dk.height_uniqueness(alg, fam)
    assert v
    assert v.details['normalized'] == {'1': 0, '2': 1, '3': 2}
    assert v.details['dims'] == [6, 5, 3]


def test_component_shift():
    alg = build_algebra(registry.presentation('CATO+DUALEXT'))
    fam = standard_family(alg)
    h = dk.find_height_function(alg, fam).value
    moved = h.shifted(2, component=1)
    assert moved.as_list() == [0, 1, 2, 2, 3]
    assert dk.check_condition_H(alg, moved, fam)
    dalg, malg = dk.delta_regrade(alg, h), dk.delta_regrade(alg, moved)
    assert malg.dims() == dalg.dims()
    v, w = dk.check_delta_self_orthogonality(dalg), dk.check_delta_self_orthogonality(malg)
    assert v and w
    assert w.details['ext'] == v.details['ext']
    assert w.details['total'] == v.details['total']
    G, H = build_gamma(dalg, v.value['tables']), build_gamma(malg, w.value['tables'])
    assert H.dims() == G.dims()
    assert H.slot_dims() == G.slot_dims()
    assert H.regraded(moved).dims() == G.regraded(h).dims()


def test_standard_to_simple_alias():
    assert dk.verify_prop_kazh is dk.verify_standard_to_simple


def test_delta_regrade():
    alg, fam, h, dalg = setup('CATO')
    assert dalg.grading_tag == 'delta'
    assert dalg.dims() == [6, 5, 3]
    assert dalg.height == h and dalg.origin is alg
    with pytest.raises(GradingError):
        dk.delta_regrade(alg, dk.HeightFunction({1: 0, 2: 0, 3: 0}, [[1, 2, 3]]))


@pytest.mark.parametrize('name, dims', [('DUALEXT', [4, 6]), ('SO4', None)])
def test_other_regrades(name, dims):
    alg, fam, h, dalg = setup(name)
    assert dalg.dims()[0] == sum(fam.dims())
    if dims is not None:
        assert dalg.dims() == dims


def test_transport():
    alg, fam, h, dalg = setup('CATO')
    with pytest.raises(GradingError):
        dk.transport_module(projective(alg, 1), dalg, h, anchor=2)
    M = dk.transport_module(fam.delta[3], dalg, h, anchor=3)
    assert sorted(M.slots) == [(1, 0), (2, 0), (3, 0)]
    N = dk.delta_nabla(fam, dalg, h, 2)
    assert socle_slots(N) == {(2, 0): 1}


@pytest.mark.parametrize('name', ['CATO', 'PARA', 'SO4', 'DUALEXT'])
def test_koszul_wrt_delta(name):
    alg, fam, h, dalg = setup(name)
    assert dk.verify_degree_zero_isomorphism(dalg, fam)
    dfam = standard_family(dalg)
    v = dk.check_delta_self_orthogonality(dalg, dfamily=dfam)
    assert v
    assert v.details['degree_zero_gldim_finite']
    assert all(n == j for n, j, d in v.details['ext'])
    assert set(v.value['tables']) == set((a, b) for a in range(1, alg.r + 1) for b in range(1, alg.r + 1))
    assert dk.verify_standard_to_simple(alg, h, fam, dalg, dfam)
    assert dk.costandard_to_simple_check(dalg, h, fam, dfam)


def test_cato_ext_total():
    alg, fam, h, dalg = setup('CATO')
    v = dk.check_delta_self_orthogonality(dalg)
    assert v.details['total'] == 9
    assert v.details['ext'] == [[0, 0, 6], [1, 1, 3]]

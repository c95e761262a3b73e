# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest
import numpy as np

from .. import core_algebra, linalg
from ..fixtures import registry, CATO
from ..homological import cartan_matrix
from ..exceptions import PresentationError, InfiniteAlgebraError, GradingError, FieldError

TRUNCATED = """\
vertices: 1
arrow x 1 1
relation x.x.x
"""

ONE_SIDED = """\
vertices: 3
arrow a 1 2
arrow a_o 2 1
arrow b 2 3
arrow b_o 3 2
relation b.a
relation a.a_o
relation a_o.a
relation b.b_o
relation b_o.b
duality a <-> a_o
duality b <-> b_o
"""


def _cato():
    return core_algebra.build_algebra(core_algebra.parse_presentation(CATO))


def test_parse_cato():
    p = core_algebra.parse_presentation(CATO)
    assert p.r == 3
    assert list(p.arrows) == ['alpha', 'alpha_o', 'beta', 'beta_o']
    assert p.arrows['beta'] == (2, 3)
    assert len(p.relations) == 2
    # written right to left, stored in application order
    assert p.relations[1] == [(p.field.one, ('beta_o', 'beta'))]
    assert p.duality['alpha'] == 'alpha_o' and p.duality['beta_o'] == 'beta'
    assert p.order == [1, 2, 3]
    assert p.relation_label(p.relations[0]) == 'alpha.alpha_o - beta_o.beta'


def test_parse_coefficients():
    text = "vertices: 2\narrow a 1 2\narrow b 2 1\nrelation 2*a.b - 3/2*a.b + a.b\n"
    p = core_algebra.parse_presentation(text)
    (c, path), = p.relations[0]
    assert p.field.to_string(c) == '3/2'
    assert path == ('b', 'a')


@pytest.mark.parametrize('text, line, column, message', [
    ("vertices: 2\narrow a 1 2\nrelation a.c\n", 3, 10, "unknown arrow 'c'"),
    ("vertices: 2\narrow a 1 2\narrow b 1 2\nrelation a.b\n", 4, 9, 'not composable'),
    ("vertices: 2\narrow a 1 3\n", 2, 10, 'out of range'),
    ("vertices: 2\narrow a 1 2\narrow b 2 1\nrelation a.b - a\n", 4, 9, 'endpoints'),
    ("vertices: 1\narrow x 1 1\nrelation x.x - x.x.x\n", 3, 9, 'inhomogeneous'),
    ("vertices: 2\narrow a 1 2\narrow b 1 2\nduality a <-> b\n", 4, 10, 'endpoint-reversing'),
    ("vertices: 2\norder: 1 1\n", 2, 1, 'permutation'),
    ("arrow a 1 2\n", 1, 1, "arrow before"),
    ("vertices: 2\nfoo bar\n", 2, 1, "unknown statement"),
])
def test_parse_errors(text, line, column, message):
    with pytest.raises(PresentationError) as err:
        core_algebra.parse_presentation(text)
    assert err.value.line == line
    assert message.split("'")[0] in str(err.value)
    if message.startswith('unknown arrow'):
        assert "'c'" in str(err.value)
        assert err.value.column == column


def test_missing_vertices():
    with pytest.raises(PresentationError):
        core_algebra.parse_presentation("# nothing\n")


def test_coefficient_not_in_field():
    text = "vertices: 2\narrow a 1 2\narrow b 2 1\nrelation a.b - 1/7*a.b\n"
    with pytest.raises(PresentationError):
        core_algebra.parse_presentation(text, field=linalg.Field('p:7'))
    with pytest.raises(FieldError):
        linalg.Field('p:7').parse('1/7')


def test_build_cato():
    alg = _cato()
    assert alg.dim == 14
    assert alg.dims() == [3, 4, 4, 2, 1]
    assert [len(alg.from_source(i)) for i in (1, 2, 3)] == [6, 5, 3]
    assert alg.cartan(1, 1) == 3
    assert alg.cartan(3, 3) == 1
    assert alg.grading_tag == 'length'
    C = cartan_matrix(alg)
    assert C.sum() == 14
    assert np.array_equal(C, C.T)


def test_products():
    alg = _cato()
    # alpha.alpha_o = beta_o.beta in the algebra
    assert alg.element_of_path(('alpha_o', 'alpha')) == alg.element_of_path(('beta', 'beta_o'))
    assert alg.element_of_path(('beta_o', 'beta')) == {}
    a = alg.arrow_basis['alpha']
    ao = alg.arrow_basis['alpha_o']
    # alpha * alpha_o: apply alpha_o first
    assert alg.mult(a, ao) == alg.element_of_path(('alpha_o', 'alpha'))
    assert alg.mult(ao, ao) == {}
    e1 = alg.idempotent[1]
    assert alg.mult(a, e1) == {a: alg.field.one}
    assert alg.multiply({e1: alg.field.one}, {a: alg.field.one}) == {}


@pytest.mark.parametrize('name', ['CATO', 'PARA', 'SO4', 'DUALEXT', 'TRIANGLE', 'ODDCYCLE'])
def test_associative(name):
    alg = core_algebra.build_algebra(registry.presentation(name))
    one = alg.field.one
    n = alg.dim
    for x in range(n):
        for y in range(n):
            if alg.basis[x].source != alg.basis[y].target:
                continue
            xy = alg.mult(x, y)
            for z in range(n):
                if alg.basis[y].source != alg.basis[z].target:
                    continue
                lhs = alg.multiply(xy, {z: one})
                rhs = alg.multiply({x: one}, alg.mult(y, z))
                assert lhs == rhs, (x, y, z)


def test_truncated_polynomial():
    alg = core_algebra.build_algebra(core_algebra.parse_presentation(TRUNCATED))
    assert alg.dims() == [1, 1, 1]
    assert [b.label for b in alg.basis] == ['e1', 'x', 'x.x']


def test_infinite():
    p = core_algebra.parse_presentation("vertices: 1\narrow x 1 1\n")
    with pytest.raises(InfiniteAlgebraError, match='raise max_len'):
        core_algebra.build_algebra(p)
    with pytest.raises(InfiniteAlgebraError):
        core_algebra.build_algebra(core_algebra.parse_presentation(TRUNCATED), max_len=2)


def test_prime_field_same_dims():
    alg_p = core_algebra.build_algebra(core_algebra.parse_presentation(CATO, field=linalg.Field('p:5')))
    assert alg_p.slot_dims() == _cato().slot_dims()


def test_regrade():
    alg = _cato()
    degs = {'alpha': 1, 'alpha_o': 0, 'beta': 1, 'beta_o': 0}
    g = core_algebra.regrade(alg, degs, tag='delta')
    assert g.grading_tag == 'delta'
    assert g.dim == alg.dim
    assert sum(g.dims()) == 14
    with pytest.raises(GradingError, match=r'alpha\.alpha_o - beta_o\.beta is inhomogeneous \(degrees 1 vs 2\)'):
        core_algebra.regrade(alg, {'alpha': 0, 'alpha_o': 1, 'beta': 1, 'beta_o': 1})
    with pytest.raises(GradingError, match='no degree given'):
        core_algebra.regrade(alg, {'alpha': 1})
    with pytest.raises(GradingError):
        core_algebra.regrade(alg, dict(degs, beta=-1))


def test_degree_zero_subalgebra():
    alg = _cato()
    g = core_algebra.regrade(alg, {'alpha': 1, 'alpha_o': 0, 'beta': 1, 'beta_o': 0})
    sub = g.degree_zero_subalgebra()
    assert sub.dim == g.dims()[0]
    assert set(sub.arrows) == {'alpha_o', 'beta_o'}


def test_validate_duality():
    assert core_algebra.validate_duality(_cato())
    p = core_algebra.parse_presentation(ONE_SIDED)
    v = core_algebra.validate_duality(core_algebra.build_algebra(p))
    assert not v
    assert v.certificate['relation'] == 'b.a'
    assert v.certificate['image'] == 'a_o.b_o'


def test_disjoint_union():
    p = registry.presentation('CATO+PARA')
    assert p.r == 6
    assert 'alpha_2' in p.arrows
    assert p.arrows['alpha_2'] == (4, 5)
    assert p.order == [1, 2, 3, 4, 5, 6]
    alg = core_algebra.build_algebra(p)
    assert alg.cartan(1, 4) == 0
    text = p.to_text()
    again = core_algebra.parse_presentation(text)
    assert len(again.relations) == len(p.relations)


def test_to_dict():
    d = _cato().to_dict()
    assert d['dim'] == 14 and d['grading'] == 'length'
    assert d['slots'][0]['basis'] == ['e1']
    assert ['alpha', 'e1', {'alpha': '1'}] in d['multiplication']

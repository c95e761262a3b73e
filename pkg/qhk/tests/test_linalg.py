# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest
from hypothesis import given, settings, strategies as st

from .. import linalg
from ..exceptions import FieldError

Q = linalg.Field('q')
F7 = linalg.Field('p:7')


def test_field_specs():
    assert Q.name == 'q' and Q.characteristic == 0
    assert F7.name == 'p:7' and F7.characteristic == 7
    assert linalg.Field('QQ') == Q
    for bad in ['p:8', 'p:x', 'r', 'p:1']:
        with pytest.raises(FieldError):
            linalg.Field(bad)


def test_parse_and_print():
    assert Q.to_string(Q.parse('6/4')) == '3/2'
    assert Q.to_string(Q.parse('-2')) == '-2'
    assert F7.to_string(F7.parse('3/2')) == '5'
    with pytest.raises(FieldError):
        F7.parse('1/7')
    with pytest.raises(FieldError):
        Q.parse('0.5')
    with pytest.raises(FieldError):
        Q.from_rational(1, 0)


def test_axpy_prunes_zeros():
    y = {0: Q.one, 1: Q.from_int(2)}
    linalg.axpy(y, Q.from_int(-1), {0: Q.one, 2: Q.one})
    assert y == {1: Q.from_int(2), 2: -Q.one}
    linalg.axpy(y, Q.one, {2: Q.one})
    assert 2 not in y


def test_echelon():
    e = linalg.Echelon(Q)
    assert e.add({0: Q.one, 1: Q.one}) == 0
    assert e.add({1: Q.from_int(2)}) == 1
    assert e.add({0: Q.from_int(3), 1: Q.from_int(5)}) is None
    assert len(e) == 2
    assert e.contains({0: Q.from_int(4)})
    assert e.rows[0] == {0: Q.one}
    f = e.copy()
    f.add({2: Q.one})
    assert len(e) == 2 and len(f) == 3
    assert e.reduce({0: Q.one, 2: Q.one}) == {2: Q.one}


def test_rank_nullspace_solve():
    # columns (1, 2), (2, 4), (0, 1)
    cols = [{0: Q.one, 1: Q.from_int(2)}, {0: Q.from_int(2), 1: Q.from_int(4)}, {1: Q.one}]
    assert linalg.rank(cols, 2, Q) == 2
    null = linalg.nullspace(cols, 2, Q)
    assert len(null) == 1
    assert null[0] == {1: Q.one, 0: Q.from_int(-2)}
    x = linalg.solve(cols, 2, {0: Q.one, 1: Q.from_int(3)}, Q)
    out = {}
    for c, v in x.items():
        linalg.axpy(out, v, cols[c])
    assert out == {0: Q.one, 1: Q.from_int(3)}
    assert linalg.solve([{0: Q.one}], 2, {1: Q.one}, Q) is None
    assert linalg.solve(cols, 2, {}, Q) == {}


def test_restrict():
    assert linalg.restrict({0: 1, 3: 2, 5: 7}, {3: 0, 5: 1}) == {0: 2, 1: 7}


@settings(deadline=None, max_examples=40)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=5),
       st.sampled_from(['q', 'p:3', 'p:101']))
def test_rank_nullity(columns, spec):
    field = linalg.Field(spec)
    cols = [{r: field.from_int(c) for r, c in enumerate(col) if field.from_int(c)} for col in columns]
    null = linalg.nullspace(cols, 3, field)
    assert linalg.rank(cols, 3, field) + len(null) == len(cols)
    for vec in null:
        out = {}
        for c, x in vec.items():
            linalg.axpy(out, x, cols[c])
        assert not out

# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
fixtures:  built-in presentations and their expected verdicts

Names are case-insensitive.  'AK:m' is the family A_(m+1) of parabolic
blocks, and 'A+B' is the disjoint union of two registered presentations.
"""

from __future__ import print_function, absolute_import, division
from .core_algebra import parse_presentation, disjoint_union
from .exceptions import PresentationError

CATO = """\
# singular block of category O for sl(3)
vertices: 3
arrow alpha 1 2
arrow alpha_o 2 1
arrow beta 2 3
arrow beta_o 3 2
relation alpha.alpha_o - beta_o.beta
relation beta.beta_o
duality alpha <-> alpha_o
duality beta <-> beta_o
order: 1 2 3
"""

PARA = """\
# parabolic counterpart of CATO (Koszul dual of its length grading)
vertices: 3
arrow alpha 1 2
arrow alpha_o 2 1
arrow beta 2 3
arrow beta_o 3 2
relation beta.alpha
relation alpha.alpha_o - beta_o.beta
relation beta.beta_o
relation alpha_o.beta_o
duality alpha <-> alpha_o
duality beta <-> beta_o
order: 1 2 3
"""

SO4 = """\
# principal block of category O for so(4)
vertices: 4
arrow alpha 1 2
arrow alpha_o 2 1
arrow beta 1 3
arrow beta_o 3 1
arrow gamma 2 4
arrow gamma_o 4 2
arrow delta 3 4
arrow delta_o 4 3
relation gamma.alpha - delta.beta
relation alpha.alpha_o
relation beta.beta_o
relation gamma.gamma_o
relation delta.delta_o
relation alpha.beta_o - gamma_o.delta
relation beta.alpha_o - delta_o.gamma
relation alpha_o.gamma_o - beta_o.delta_o
duality alpha <-> alpha_o
duality beta <-> beta_o
duality gamma <-> gamma_o
duality delta <-> delta_o
order: 1 2 3 4
"""

DUALEXT = """\
# dual extension of the Kronecker quiver
vertices: 2
arrow alpha 1 2
arrow beta 1 2
arrow alpha_o 2 1
arrow beta_o 2 1
relation alpha.alpha_o
relation beta.alpha_o
relation alpha.beta_o
relation beta.beta_o
duality alpha <-> alpha_o
duality beta <-> beta_o
order: 1 2
"""

ODDCYCLE = """\
# quasi-hereditary and standard Koszul, but the arrows 1 -> 2 -> 3 and 1 -> 3
# ask for incompatible height differences
vertices: 3
arrow a 1 2
arrow a_o 2 1
arrow b 2 3
arrow b_o 3 2
arrow c 1 3
arrow c_o 3 1
relation a.a_o
relation a.c_o
relation c.a_o
relation c.c_o
relation b.b_o
duality a <-> a_o
duality b <-> b_o
duality c <-> c_o
order: 1 2 3
"""


def triangle():
    """Radical-square-zero algebra on the doubled triangle; not quasi-hereditary."""
    arrows = [('a', 1, 2), ('a_o', 2, 1), ('b', 2, 3), ('b_o', 3, 2), ('c', 1, 3), ('c_o', 3, 1)]
    lines = ['# doubled triangle with all paths of length two set to zero', 'vertices: 3']
    lines += ['arrow {} {} {}'.format(*a) for a in arrows]
    for x, sx, tx in arrows:
        for y, sy, ty in arrows:
            if sy == tx:
                lines.append('relation {}.{}'.format(y, x))
    lines += ['duality a <-> a_o', 'duality b <-> b_o', 'duality c <-> c_o', 'order: 1 2 3']
    return '\n'.join(lines) + '\n'


def ak(m):
    """
    The algebra A_(m+1): a line of m+1 vertices with arrows a_i: i -> i+1 and a_i_o back.

    Parameters:
    ------------
    m:  number of edges (at least 1)
    """
    if m < 1:
        raise PresentationError("AK:m needs m >= 1, got {}".format(m))
    lines = ['# parabolic block A_{}'.format(m + 1), 'vertices: {}'.format(m + 1)]
    for i in range(1, m + 1):
        lines.append('arrow a{} {} {}'.format(i, i, i + 1))
        lines.append('arrow a{}_o {} {}'.format(i, i + 1, i))
    lines.append('relation a{0}.a{0}_o'.format(m))
    for i in range(2, m + 1):
        lines.append('relation a{}.a{}'.format(i, i - 1))
        lines.append('relation a{0}.a{0}_o - a{1}_o.a{1}'.format(i - 1, i))
        lines.append('relation a{}_o.a{}_o'.format(i - 1, i))
    for i in range(1, m + 1):
        lines.append('duality a{0} <-> a{0}_o'.format(i))
    lines.append('order: {}'.format(' '.join(str(v) for v in range(1, m + 2))))
    return '\n'.join(lines) + '\n'


# Reference presentations of Gamma with the Ext degree of each arrow;
# 'c' marks the Ext^1 arrow and 'o' the Hom arrow on each edge.
GAMMA_REFERENCE = {
    'CATO': ("""\
vertices: 3
arrow alpha_c 2 1
arrow alpha_o 2 1
arrow beta_c 3 2
arrow beta_o 3 2
relation alpha_c.beta_c
relation alpha_o.beta_c - alpha_c.beta_o
""", {'alpha_c': 1, 'alpha_o': 0, 'beta_c': 1, 'beta_o': 0}),
    'PARA': ("""\
vertices: 3
arrow alpha_c 2 1
arrow alpha_o 2 1
arrow beta_c 3 2
arrow beta_o 3 2
relation alpha_o.beta_c - alpha_c.beta_o
relation alpha_o.beta_o
""", {'alpha_c': 1, 'alpha_o': 0, 'beta_c': 1, 'beta_o': 0}),
    # tensor square of the sl2 block: the Ext^1 arrows anticommute (Koszul sign)
    'SO4': ("""\
vertices: 4
arrow alpha_c 2 1
arrow alpha_o 2 1
arrow beta_c 3 1
arrow beta_o 3 1
arrow gamma_c 4 2
arrow gamma_o 4 2
arrow delta_c 4 3
arrow delta_o 4 3
relation alpha_c.gamma_c + beta_c.delta_c
relation alpha_o.gamma_c - beta_c.delta_o
relation alpha_c.gamma_o - beta_o.delta_c
relation alpha_o.gamma_o - beta_o.delta_o
""", {'alpha_c': 1, 'alpha_o': 0, 'beta_c': 1, 'beta_o': 0,
      'gamma_c': 1, 'gamma_o': 0, 'delta_c': 1, 'delta_o': 0}),
}

_ALL_PASS = 'all'
_BLOCKED_AFTER_QH = ['bgg', 'standard_koszul', 'height_function', 'condition_H', 'delta_regrade',
                     'degree_zero_iso', 'delta_self_orthogonal', 'gamma_built', 'gamma_directed',
                     'gamma_koszul', 'costandard_simple', 'double_dual_dims']
_BLOCKED_AFTER_H = ['condition_H', 'delta_regrade', 'degree_zero_iso', 'delta_self_orthogonal', 'gamma_built',
                    'gamma_directed', 'gamma_koszul', 'costandard_simple', 'double_dual_dims']


class FixtureRegistry(object):
    """
    Named presentation sources.

    Attributes:
        sources:  name -> presentation text
        expected:  name -> stage -> expected status ('all' means every stage passes)
    """

    def __init__(self):
        self.sources = {'CATO': CATO, 'PARA': PARA, 'SO4': SO4, 'DUALEXT': DUALEXT,
                        'TRIANGLE': triangle(), 'ODDCYCLE': ODDCYCLE}
        self.expected = {'CATO': _ALL_PASS, 'PARA': _ALL_PASS, 'SO4': _ALL_PASS, 'DUALEXT': _ALL_PASS,
                         'TRIANGLE': dict([('quasi_hereditary', 'fail')] +
                                          [(s, 'blocked') for s in _BLOCKED_AFTER_QH]),
                         'ODDCYCLE': dict([('quasi_hereditary', 'pass'), ('standard_koszul', 'pass'),
                                           ('height_function', 'fail')] +
                                          [(s, 'blocked') for s in _BLOCKED_AFTER_H])}

    def names(self):
        return sorted(self.sources) + ['AK:m']

    def source(self, name):
        """Presentation text of a registered name."""
        key = name.strip().upper()
        if '+' in key:
            raise PresentationError("'{}' is a union; use presentation()".format(name))
        if key.startswith('AK:'):
            try:
                m = int(key[3:])
            except ValueError:
                raise PresentationError("bad AK parameter in '{}'".format(name))
            return ak(m)
        if key not in self.sources:
            raise PresentationError("unknown fixture '{}' (known: {})".format(name, ', '.join(self.names())))
        return self.sources[key]

    def presentation(self, name, field=None):
        """Parsed presentation; 'A+B' gives the disjoint union."""
        parts = [x for x in name.split('+')]
        p = parse_presentation(self.source(parts[0]), field=field)
        for other in parts[1:]:
            p = disjoint_union(p, parse_presentation(self.source(other), field=field))
        return p

    def text(self, name):
        """Presentation text, also for unions."""
        if '+' in name:
            return self.presentation(name).to_text(header=name.upper())
        return self.source(name)

    def expected_status(self, name, stage):
        key = name.strip().upper()
        if key.startswith('AK:'):
            return 'pass'
        exp = self.expected.get(key)
        if exp is None:
            return None
        if exp == _ALL_PASS:
            return 'pass'
        return exp.get(stage, 'pass')

    def gamma_reference(self, name):
        """(text, degrees) of the reference presentation of Gamma, or None."""
        return GAMMA_REFERENCE.get(name.strip().upper())


registry = FixtureRegistry()


def is_fixture(name):
    key = name.strip().upper()
    return all(part.strip() in registry.sources or part.strip().startswith('AK:') for part in key.split('+'))

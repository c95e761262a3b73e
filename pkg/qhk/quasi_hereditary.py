# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
quasi_hereditary:  standard and costandard modules, Delta-filtrations, BGG reciprocity.
"""

from __future__ import print_function, absolute_import, division
import logging
import six

from .graded_modules import (projective, generated_submodule, quotient, dualize, radical_layers,
                             composition_factors, direct_sum, graded_hom, shift_label)
from .homological import ext_table, Resolution
from .qhk import Verdict

log = logging.getLogger(__name__)


def trace_submodule(P, alg, i):
    """Echelon span of the submodule of P generated by its vectors at vertices above i."""
    above = [k for k in range(P.dim) if alg.pos[P.vertex(k)] > alg.pos[i]]
    return generated_submodule(P, [P.unit(k) for k in above])


def standard_module(alg, i):
    """Delta_i = P_i / (trace of the P_j, j > i)."""
    P = projective(alg, i)
    return quotient(P, trace_submodule(P, alg, i), label='Delta_{}'.format(i))


def costandard_module(alg, i):
    """Nabla_i = (Delta_i)^o."""
    N = dualize(standard_module(alg, i))
    N.label = 'Nabla_{}'.format(i)
    return N


class DeltaFiltration(object):
    """
    Delta-filtration found by the trace method.

    Attributes:
        module:  label of the filtered module
        subfactors:  list of (j, d), Delta_j<d>, top to bottom
        chain:  dimensions of the submodule chain, bottom to top
        obstruction:  None, or a dict describing the first step that does not split
    """

    def __init__(self, module, subfactors, chain, obstruction=None):
        self.module = module
        self.subfactors = subfactors
        self.chain = chain
        self.obstruction = obstruction

    def __bool__(self):
        return self.obstruction is None

    __nonzero__ = __bool__

    def multiplicities(self):
        out = {}
        for j, d in self.subfactors:
            out[j] = out.get(j, 0) + 1
        return out

    def to_dict(self):
        d = {'module': self.module, 'subfactors': [shift_label('Delta_{}'.format(j), s) for j, s in self.subfactors],
             'chain': self.chain}
        if self.obstruction is not None:
            d['obstruction'] = self.obstruction
        return d


def delta_filtration(M, family):
    """
    Peel off the trace of the maximal vertex present; it must be a sum of shifted Delta_j.

    Parameters:
    ------------
    M:  GradedModule
    family:  StandardFamily of the same algebra
    """
    alg = M.alg
    X = M
    found = []
    chain = [0]
    while X.dim:
        present = set(v for v, d in X.slots)
        j = max(present, key=lambda v: alg.pos[v])
        gens = X.indices(vertex=j)
        U = generated_submodule(X, [X.unit(k) for k in gens])
        expected = len(gens) * family.delta[j].dim
        if len(U) != expected:
            obstruction = {'vertex': j, 'generators': len(gens), 'trace_dim': len(U),
                           'expected_dim': expected, 'remaining_dim': X.dim}
            log.info("%s has no Delta-filtration: %s", M.label, obstruction)
            return DeltaFiltration(M.label, list(reversed(found)), chain, obstruction)
        step = sorted((X.degree(k), k) for k in gens)
        found.extend((j, d) for d, k in reversed(step))
        chain.append(chain[-1] + len(U))
        X = quotient(X, U)
    return DeltaFiltration(M.label, list(reversed(found)), chain)


class StandardFamily(object):
    """
    Standard and costandard modules of one algebra, with cached filtrations and resolutions.

    Attributes:
        alg:  GradedAlgebra
        delta:  vertex -> Delta_i
        layers:  vertex -> radical layers of Delta_i
        graded_parts:  vertex -> {degree: {vertex: multiplicity}}
        composition:  vertex -> {vertex: [Delta_i : S_vertex]}
    """

    def __init__(self, alg):
        self.alg = alg
        self.delta = {}
        self.layers = {}
        self.graded_parts = {}
        self.composition = {}
        for i in range(1, alg.r + 1):
            D = standard_module(alg, i)
            self.delta[i] = D
            self.layers[i] = radical_layers(D)
            parts = {}
            for (v, d), n in six.iteritems(D.dims()):
                parts.setdefault(d, {})[v] = n
            self.graded_parts[i] = parts
            self.composition[i] = composition_factors(D)
        self._nabla = {}
        self._filtrations = {}
        self._resolutions = {}

    def nabla(self, i):
        if i not in self._nabla:
            self._nabla[i] = costandard_module(self.alg, i)
        return self._nabla[i]

    def delta_sum(self):
        return direct_sum([self.delta[i] for i in range(1, self.alg.r + 1)], label='Delta')

    def nabla_sum(self):
        return direct_sum([self.nabla(i) for i in range(1, self.alg.r + 1)], label='Nabla')

    def filtration(self, i):
        """Delta-filtration of P_i."""
        if i not in self._filtrations:
            self._filtrations[i] = delta_filtration(projective(self.alg, i), self)
        return self._filtrations[i]

    def resolution(self, i, n_max=None):
        """Minimal resolution of Delta_i, extended on demand."""
        if i not in self._resolutions:
            self._resolutions[i] = Resolution(self.delta[i])
        res = self._resolutions[i]
        res.ensure(self.alg.dim if n_max is None else n_max)
        return res

    def dims(self):
        return [self.delta[i].dim for i in range(1, self.alg.r + 1)]

    def to_dict(self):
        out = {}
        for i in range(1, self.alg.r + 1):
            out[str(i)] = {'dim': self.delta[i].dim,
                           'layers': [{str(v): n for v, n in layer.items()} for layer in self.layers[i]]}
        return out


def standard_family(alg):
    return StandardFamily(alg)


def filtration_multiplicities(family):
    """(i, j) -> (P_i : Delta_j), for the filtrations that exist."""
    out = {}
    for i in range(1, family.alg.r + 1):
        filt = family.filtration(i)
        if filt:
            for j, n in six.iteritems(filt.multiplicities()):
                out[(i, j)] = n
    return out


def _end_dim(D):
    top = max(D.degrees()) if D.dim else 0
    return sum(graded_hom(D, D, j).dim for j in range(-top, top + 1))


def check_quasi_hereditary(alg, family=None, name='quasi_hereditary'):
    """Every P_i has a Delta-filtration and End(Delta_i) is one-dimensional."""
    family = family if family is not None else standard_family(alg)
    details = {'delta_dims': family.dims(), 'filtrations': {}, 'end_dims': {}}
    cert = None
    for i in range(1, alg.r + 1):
        filt = family.filtration(i)
        details['filtrations'][str(i)] = filt.to_dict()['subfactors']
        if not filt and cert is None:
            cert = dict(filt.obstruction, projective=i)
    for i in range(1, alg.r + 1):
        e = _end_dim(family.delta[i])
        details['end_dims'][str(i)] = e
        if e != 1 and cert is None:
            cert = {'standard': i, 'end_dim': e}
    return Verdict(name, cert is None, details=details, certificate=cert, value=family)


def verify_bgg_reciprocity(alg, family=None, name='bgg'):
    """(P_i : Delta_j) = [Delta_j : S_i] for all i, j."""
    family = family if family is not None else standard_family(alg)
    mult = filtration_multiplicities(family)
    r = alg.r
    table = [[mult.get((i, j), 0) for j in range(1, r + 1)] for i in range(1, r + 1)]
    comp = [[family.composition[j].get(i, 0) for j in range(1, r + 1)] for i in range(1, r + 1)]
    cert = None
    for i in range(r):
        for j in range(r):
            if table[i][j] != comp[i][j]:
                cert = {'projective': i + 1, 'standard': j + 1,
                        'filtration_multiplicity': table[i][j], 'composition_multiplicity': comp[i][j]}
                break
        if cert:
            break
    implied = [sum(comp[i][j] * family.delta[j + 1].dim for j in range(r)) for i in range(r)]
    details = {'multiplicities': table, 'implied_projective_dims': implied,
               'multiplicity_free': is_multiplicity_free(family)}
    return Verdict(name, cert is None, details=details, certificate=cert)


def is_multiplicity_free(family):
    mult = filtration_multiplicities(family)
    if any(n > 1 for n in six.itervalues(mult)):
        return False
    return all(n <= 1 for comp in six.itervalues(family.composition) for n in six.itervalues(comp))


def verify_delta_nabla_orthogonality(alg, n_max=None, family=None, name='delta_nabla_orthogonal'):
    """dim Hom(Delta_i, Nabla_j) = delta_ij and Ext^n(Delta_i, Nabla_j) = 0 for 1 <= n <= n_max (all shifts)."""
    family = family if family is not None else standard_family(alg)
    n_max = alg.dim if n_max is None else n_max
    r = alg.r
    hom = [[0] * r for _ in range(r)]
    cert = None
    for i in range(1, r + 1):
        res = family.resolution(i, n_max + 1)
        for j in range(1, r + 1):
            table = ext_table(family.delta[i], family.nabla(j), n_max, res=res)
            hom[i - 1][j - 1] = table.dim(0)
            higher = {n: table.dim(n) for n in range(1, n_max + 1) if table.dim(n)}
            if cert is None and (hom[i - 1][j - 1] != (1 if i == j else 0) or higher):
                cert = {'standard': i, 'costandard': j, 'hom_dim': hom[i - 1][j - 1],
                        'ext': {str(n): d for n, d in higher.items()}}
    return Verdict(name, cert is None, details={'hom_dims': hom, 'n_max': n_max}, certificate=cert)

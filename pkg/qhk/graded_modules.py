# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
graded_modules:  finite-dimensional graded representations

A GradedModule has a basis in which every vector sits in one (vertex, degree)
slot, and for every arrow a sparse matrix, stored by columns, of its action.
Submodules are handled as Echelon spans of module vectors.
"""

from __future__ import print_function, absolute_import, division
import logging
from collections import deque
import six

from . import linalg
from .linalg import Echelon, axpy
from .exceptions import DualityMissingError, GradingError

log = logging.getLogger(__name__)


def shift_label(name, j):
    return name if not j else "{}<{}>".format(name, j)


class GradedModule(object):
    """
    Graded module given by its slots and arrow actions.

    Parameters:
    ------------
    alg:  the GradedAlgebra acting
    slots:  list of (vertex, degree), one per basis vector
    action:  dict arrow -> {column: {row: coefficient}}
    label:  provenance tag, e.g. 'P_2<1>'
    """

    def __init__(self, alg, slots, action, label='M'):
        self.alg = alg
        self.field = alg.field
        self.slots = list(slots)
        self.action = {a: action.get(a, {}) for a in alg.arrows}
        self.label = label

    def __len__(self):
        return len(self.slots)

    @property
    def dim(self):
        return len(self.slots)

    def __repr__(self):
        return "GradedModule({}, dim {})".format(self.label, self.dim)

    def vertex(self, k):
        return self.slots[k][0]

    def degree(self, k):
        return self.slots[k][1]

    def dims(self):
        """(vertex, degree) -> dimension over the nonzero slots."""
        out = {}
        for s in self.slots:
            out[s] = out.get(s, 0) + 1
        return out

    def indices(self, vertex=None, degree=None):
        return [k for k, (v, d) in enumerate(self.slots)
                if (vertex is None or v == vertex) and (degree is None or d == degree)]

    def degrees(self):
        return sorted(set(d for v, d in self.slots))

    def act(self, a, vec):
        out = {}
        cols = self.action[a]
        for k, c in six.iteritems(vec):
            img = cols.get(k)
            if img:
                axpy(out, c, img)
        return out

    def act_path(self, path, vec):
        for a in path:
            vec = self.act(a, vec)
            if not vec:
                break
        return vec

    def act_basis(self, x, vec):
        """Action of the algebra basis element x."""
        b = self.alg.basis[x]
        if b.length == 0:
            return {k: c for k, c in six.iteritems(vec) if self.slots[k][0] == b.source}
        return self.act_path(b.path, {k: c for k, c in six.iteritems(vec) if self.slots[k][0] == b.source})

    def unit(self, k):
        return {k: self.field.one}

    def shift(self, j):
        """M<j>, with (M<j>)_i = M_{i-j}."""
        return GradedModule(self.alg, [(v, d + j) for v, d in self.slots], self.action,
                            label=shift_label(self.label, j))

    def check_relations(self):
        """First (relation, vector) on which a relation acts nonzero, or None."""
        for rel in self.alg.relations:
            src = self.alg.arrows[rel[0][1][0]][0]
            for k in self.indices(vertex=src):
                out = {}
                for c, path in rel:
                    axpy(out, c, self.act_path(path, self.unit(k)))
                if out:
                    return (self.alg.presentation.relation_label(rel), k)
        return None

    def to_dict(self):
        dims = sorted([v, d, n] for (v, d), n in six.iteritems(self.dims()))
        matrices = {}
        for a, (s, t) in six.iteritems(self.alg.arrows):
            cols = self.indices(vertex=s)
            rows = self.indices(vertex=t)
            if not cols or not rows:
                continue
            mat = [[self.field.to_string(self.action[a].get(c, {}).get(r, self.field.zero)) for c in cols]
                   for r in rows]
            matrices[a] = {'rows': rows, 'columns': cols, 'matrix': mat}
        return {'label': self.label, 'dim': self.dim, 'dims': dims,
                'slots': [list(s) for s in self.slots], 'action': matrices}


class FreeModule(GradedModule):
    """
    Direct sum of shifted indecomposable projectives.

    Attributes:
        summands:  list of (vertex, shift)
        basis_info:  per module vector, (summand, algebra basis index)
        generators:  module index of the top vector of each summand
    """

    def __init__(self, alg, summands, label=None):
        self.summands = [(int(v), int(s)) for v, s in summands]
        self.basis_info = []
        self.index = {}
        self.generators = []
        slots = []
        by_source = {}
        for b in alg.basis:
            by_source.setdefault(b.source, []).append(b.index)
        for k, (v, s) in enumerate(self.summands):
            for x in by_source.get(v, []):
                self.index[(k, x)] = len(slots)
                if x == alg.idempotent[v]:
                    self.generators.append(len(slots))
                self.basis_info.append((k, x))
                slots.append((alg.basis[x].target, alg.degrees[x] + s))
        action = {}
        for a in alg.arrows:
            cols = {}
            for m, (k, x) in enumerate(self.basis_info):
                img = alg.left.get((a, x))
                if img:
                    cols[m] = {self.index[(k, y)]: c for y, c in six.iteritems(img)}
            action[a] = cols
        if label is None:
            label = ' + '.join(shift_label('P_{}'.format(v), s) for v, s in self.summands) or '0'
        super(FreeModule, self).__init__(alg, slots, action, label)

    def element(self, k, vec):
        """Embed an algebra vector (supported in L e_v) into summand k."""
        return {self.index[(k, x)]: c for x, c in six.iteritems(vec)}


def free_module(alg, summands, label=None):
    return FreeModule(alg, summands, label)


def _check_vertex(alg, i):
    if not 1 <= i <= alg.r:
        raise ValueError("vertex {} out of range 1..{}".format(i, alg.r))


def projective(alg, i, j=0):
    """P_i<j> = (L e_i)<j>."""
    _check_vertex(alg, i)
    return FreeModule(alg, [(i, j)], label=shift_label('P_{}'.format(i), j))


def simple(alg, i, j=0):
    _check_vertex(alg, i)
    return GradedModule(alg, [(i, j)], {}, label=shift_label('S_{}'.format(i), j))


def direct_sum(mods, label=None):
    if not mods:
        raise ValueError("empty direct sum")
    alg = mods[0].alg
    slots = []
    action = {a: {} for a in alg.arrows}
    for M in mods:
        off = len(slots)
        slots.extend(M.slots)
        for a, cols in six.iteritems(M.action):
            for c, img in six.iteritems(cols):
                action[a][c + off] = {r + off: v for r, v in six.iteritems(img)}
    return GradedModule(alg, slots, action, label or ' + '.join(M.label for M in mods))


def split_homogeneous(M, vec):
    parts = {}
    for k, c in six.iteritems(vec):
        parts.setdefault(M.slots[k], {})[k] = c
    return [parts[s] for s in sorted(parts)]


def generated_submodule(M, vectors, ech=None):
    """Echelon span of the graded submodule generated by vectors (added to ech if given)."""
    ech = ech if ech is not None else Echelon(M.field)
    queue = deque()
    for v in vectors:
        queue.extend(split_homogeneous(M, v))
    while queue:
        v = queue.popleft()
        if ech.add(v) is None:
            continue
        for a in M.alg.arrows:
            w = M.act(a, v)
            if w:
                queue.append(w)
    return ech


class Submodule(GradedModule):
    """Graded submodule on the reduced echelon rows of a span; rows are homogeneous."""

    def __init__(self, parent, ech, label=None):
        self.parent = parent
        self.ech = ech
        self.pivots = ech.pivots()
        self.rows = [ech.rows[p] for p in self.pivots]
        position = {p: k for k, p in enumerate(self.pivots)}
        slots = [parent.slots[p] for p in self.pivots]
        action = {}
        for a in parent.alg.arrows:
            cols = {}
            for k, row in enumerate(self.rows):
                img = parent.act(a, row)
                if img:
                    cols[k] = linalg.restrict(ech.coordinates(img), position)
            action[a] = cols
        super(Submodule, self).__init__(parent.alg, slots, action, label or 'sub({})'.format(parent.label))

    def include(self, vec):
        out = {}
        for k, c in six.iteritems(vec):
            axpy(out, c, self.rows[k])
        return out


def submodule(M, ech, label=None):
    return Submodule(M, ech, label)


class QuotientModule(GradedModule):
    """M / U on the non-pivot coordinates of U's reduced echelon basis."""

    def __init__(self, parent, ech, label=None):
        self.parent = parent
        self.ech = ech
        self.kept = [k for k in range(parent.dim) if k not in ech.rows]
        self.position = {k: n for n, k in enumerate(self.kept)}
        slots = [parent.slots[k] for k in self.kept]
        action = {}
        for a in parent.alg.arrows:
            cols = {}
            for n, k in enumerate(self.kept):
                img = self.project(parent.act(a, parent.unit(k)))
                if img:
                    cols[n] = img
            action[a] = cols
        super(QuotientModule, self).__init__(parent.alg, slots, action, label or 'quot({})'.format(parent.label))

    def project(self, vec):
        return linalg.restrict(self.ech.reduce(vec), self.position)


def quotient(M, ech, label=None):
    return QuotientModule(M, ech, label)


def radical(M):
    """Echelon span of J M."""
    images = []
    for a in M.alg.arrows:
        for k in range(M.dim):
            w = M.act(a, M.unit(k))
            if w:
                images.append(w)
    return generated_submodule(M, images)


def _vertex_counts(ech, M):
    out = {}
    for p in ech.rows:
        v = M.slots[p][0]
        out[v] = out.get(v, 0) + 1
    return out


def radical_layers(M):
    """[J^k M / J^(k+1) M : S_i] for k = 0, 1, ..., as a list of {vertex: multiplicity}."""
    layers = []
    current = Echelon(M.field, [M.unit(k) for k in range(M.dim)])
    while len(current):
        images = []
        for row in current.basis():
            for a in M.alg.arrows:
                w = M.act(a, row)
                if w:
                    images.append(w)
        nxt = Echelon(M.field, [])
        for w in images:
            for part in split_homogeneous(M, w):
                nxt.add(part)
        top, below = _vertex_counts(current, M), _vertex_counts(nxt, M)
        layers.append({v: n - below.get(v, 0) for v, n in sorted(top.items()) if n - below.get(v, 0)})
        current = nxt
    return layers


def top(M):
    """(vertex, degree) -> multiplicity of the graded top M / J M."""
    rad = radical(M)
    out = dict(M.dims())
    for p in rad.rows:
        s = M.slots[p]
        out[s] -= 1
    return {s: n for s, n in six.iteritems(out) if n}


def socle(M):
    """Echelon span of the socle, computed slot by slot."""
    ech = Echelon(M.field)
    for (v, d) in sorted(M.dims()):
        idx = M.indices(vertex=v, degree=d)
        rows = {}
        columns = []
        for k in idx:
            col = {}
            for a, (s, t) in six.iteritems(M.alg.arrows):
                if s != v:
                    continue
                for r, c in six.iteritems(M.action[a].get(k, {})):
                    col[(a, r)] = c
            columns.append(col)
            for key in col:
                rows.setdefault(key, len(rows))
        columns = [linalg.restrict(col, rows) for col in columns]
        for vec in linalg.nullspace(columns, len(rows), M.field):
            ech.add({idx[c]: x for c, x in six.iteritems(vec)})
    return ech


def socle_slots(M):
    out = {}
    for p in socle(M).rows:
        s = M.slots[p]
        out[s] = out.get(s, 0) + 1
    return out


def composition_factors(M):
    """vertex -> [M : S_vertex]."""
    out = {}
    for v, d in M.slots:
        out[v] = out.get(v, 0) + 1
    return out


class HomSpace(object):
    """
    Basis of Hom(M, N<j>) in the graded category.

    Each basis map is a dict: source index -> image vector in N.
    """

    def __init__(self, source, target, shift, basis):
        self.source = source
        self.target = target
        self.shift = shift
        self.basis = basis

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    def apply(self, f, vec):
        out = {}
        for k, c in six.iteritems(vec):
            img = f.get(k)
            if img:
                axpy(out, c, img)
        return out

    def to_dict(self):
        return {'source': self.source.label, 'target': self.target.label, 'shift': self.shift, 'dim': self.dim}


def _same_grading(M, N):
    if M.alg.grading_tag != N.alg.grading_tag or M.alg.dim != N.alg.dim:
        raise GradingError("modules over different gradings ({} and {})"
                           .format(M.alg.grading_tag, N.alg.grading_tag))


def graded_hom(M, N, j=0):
    """
    Basis of Hom_Gr(M, N<j>): maps sending the slot (v, d) of M into the slot (v, d - j) of N.

    Parameters:
    ------------
    M, N:  GradedModules over the same graded algebra
    j:  shift of N
    """
    _same_grading(M, N)
    n_index = {}
    for l, s in enumerate(N.slots):
        n_index.setdefault(s, []).append(l)
    variables = []
    var_index = {}
    for k, (v, d) in enumerate(M.slots):
        for l in n_index.get((v, d - j), []):
            var_index[(k, l)] = len(variables)
            variables.append((k, l))
    if not variables:
        return HomSpace(M, N, j, [])
    rows = {}
    columns = [dict() for _ in variables]

    def add(row_key, var, c):
        r = rows.setdefault(row_key, len(rows))
        col = columns[var]
        t = col.get(r, M.field.zero) + c
        if t:
            col[r] = t
        else:
            col.pop(r, None)

    for a in M.alg.arrows:
        for k in range(M.dim):
            # f(a e_k)
            for kp, c in six.iteritems(M.action[a].get(k, {})):
                for l in n_index.get((M.slots[kp][0], M.slots[kp][1] - j), []):
                    add((a, k, l), var_index[(kp, l)], c)
            # - a f(e_k)
            for l in n_index.get((M.slots[k][0], M.slots[k][1] - j), []):
                for lp, c in six.iteritems(N.action[a].get(l, {})):
                    add((a, k, lp), var_index[(k, l)], -c)
    basis = []
    for vec in linalg.nullspace(columns, len(rows), M.field):
        f = {}
        for var, c in six.iteritems(vec):
            k, l = variables[var]
            f.setdefault(k, {})[l] = c
        basis.append(f)
    return HomSpace(M, N, j, basis)


def dualize(M):
    """M^o: slot (v, -d), arrow a acting by the transpose of the action of its dual arrow."""
    alg = M.alg
    if alg.duality is None:
        raise DualityMissingError("no duality declared for this algebra")
    for a, b in six.iteritems(alg.duality):
        if alg.arrow_degrees[a] != alg.arrow_degrees[b]:
            raise GradingError("duality {} <-> {} does not preserve the {} grading"
                               .format(a, b, alg.grading_tag))
    action = {a: {} for a in alg.arrows}
    for a in alg.arrows:
        cols = action[a]
        for c, img in six.iteritems(M.action[alg.duality[a]]):
            for r, x in six.iteritems(img):
                cols.setdefault(r, {})[c] = x
    label = M.label[:-2] if M.label.endswith('^o') else M.label + '^o'
    return GradedModule(alg, [(v, -d) for v, d in M.slots], action, label)


def injective(alg, i, j=0):
    """I_i<j> = (P_i<-j>)^o."""
    I = dualize(projective(alg, i, -j))
    I.label = shift_label('I_{}'.format(i), j)
    return I

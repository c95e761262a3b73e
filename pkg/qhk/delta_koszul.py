# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
delta_koszul:  height functions, condition (H) and the Delta-grading

A height function h assigns an integer to every vertex; condition (H) asks
that the degree-l part of Delta_j only has composition factors S_i with
h(i) = h(j) - l.  When it holds, the arrow j -> i gets Delta-degree
(1 + h(i) - h(j)) / 2 and the degree-0 part of the regraded algebra is
isomorphic to Delta.
"""

from __future__ import print_function, absolute_import, division
import logging
from collections import deque
import six

from .core_algebra import regrade
from .graded_modules import GradedModule, projective, dualize, socle_slots, simple
from .quasi_hereditary import trace_submodule, StandardFamily
from .homological import ext_table, is_linear, minimal_resolution
from .linalg import Echelon
from .exceptions import GradingError
from .qhk import Verdict

log = logging.getLogger(__name__)


class HeightFunction(object):
    """
    Vertex heights, normalized to minimum 0 on each connected component of the quiver.

    Attributes:
        values:  vertex -> integer
        components:  list of sorted vertex lists
    """

    def __init__(self, values, components):
        self.values = dict(values)
        self.components = [sorted(c) for c in components]

    def __getitem__(self, v):
        return self.values[v]

    def __eq__(self, other):
        return isinstance(other, HeightFunction) and other.values == self.values

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "HeightFunction({})".format(self.as_list())

    def as_list(self):
        return [self.values[v] for v in sorted(self.values)]

    def normalized(self):
        values = dict(self.values)
        for comp in self.components:
            low = min(values[v] for v in comp)
            for v in comp:
                values[v] -= low
        return HeightFunction(values, self.components)

    def shifted(self, c, component=None):
        values = dict(self.values)
        for v in (self.components[component] if component is not None else values):
            values[v] += c
        return HeightFunction(values, self.components)

    def to_dict(self):
        return {str(v): h for v, h in sorted(self.values.items())}


def quiver_components(alg):
    adj = {v: set() for v in range(1, alg.r + 1)}
    for a, (s, t) in six.iteritems(alg.arrows):
        adj[s].add(t)
        adj[t].add(s)
    seen = set()
    comps = []
    for v in range(1, alg.r + 1):
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _tree_path(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]][0])
    return path


def _contradiction(h, parent, u, w, step, arrow):
    """Certificate for the edge u -> w demanding h(w) = h(u) + step against the BFS tree."""
    pu, pw = _tree_path(parent, u), _tree_path(parent, w)
    lca = next(x for x in pw if x in set(pu))
    claim_tree = h[w] - h[lca]
    claim_edge = h[u] + step - h[lca]
    # lca -> ... -> w, across the edge, u -> ... -> lca
    cycle = list(reversed(pw[:pw.index(lca) + 1])) + pu[:pu.index(lca) + 1]
    defect = abs(claim_edge - claim_tree)
    return {'claims': ['h({})=h({}){:+d}'.format(w, lca, claim_edge), 'h({})=h({}){:+d}'.format(w, lca, claim_tree)],
            'cycle': cycle, 'edge': arrow, 'defect': defect, 'odd': defect % 2 == 1}


def propagate_heights(alg):
    """
    Breadth-first propagation of h(i) - h(j) = +1 (j before i in the order) or -1 for each arrow j -> i.

    Returns (HeightFunction, None) or (None, certificate).
    """
    edges = {v: [] for v in range(1, alg.r + 1)}
    for a, (s, t) in six.iteritems(alg.arrows):
        if s == t:
            return None, {'reason': 'loop', 'edge': a, 'vertex': s}
        step = 1 if alg.pos[s] < alg.pos[t] else -1
        edges[s].append((t, step, a))
        edges[t].append((s, -step, a))
    h = {}
    parent = {}
    comps = quiver_components(alg)
    for comp in comps:
        root = comp[0]
        h[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, step, a in edges[u]:
                if w not in h:
                    h[w] = h[u] + step
                    parent[w] = (u, a)
                    queue.append(w)
                elif h[w] != h[u] + step:
                    cert = _contradiction(h, parent, u, w, step, a)
                    log.info("height propagation contradiction: %s vs %s", *cert['claims'])
                    return None, cert
    return HeightFunction(h, comps).normalized(), None


def check_condition_H(alg, h, family, name='condition_H'):
    """[(Delta_j)_l : S_i] = 0 whenever h(i) != h(j) - l."""
    violations = []
    for j in range(1, alg.r + 1):
        parts = family.graded_parts[j]
        for l in sorted(parts):
            for i in sorted(parts[l]):
                if h[i] != h[j] - l:
                    violations.append({'standard': j, 'degree': l, 'vertex': i, 'multiplicity': parts[l][i],
                                       'h_i': h[i], 'h_j_minus_l': h[j] - l})
    details = {'h': h.to_dict() if isinstance(h, HeightFunction) else {str(k): v for k, v in h.items()},
               'violations': violations}
    return Verdict(name, not violations, details=details, certificate=violations[0] if violations else None)


def find_height_function(alg, family, verify=True, name='height_function'):
    """Propagate heights along the arrows, then (optionally) verify condition (H)."""
    h, cert = propagate_heights(alg)
    if h is None:
        return Verdict(name, False, details={}, certificate=cert)
    details = {'h': h.to_dict(), 'components': h.components}
    if verify:
        v = check_condition_H(alg, h, family)
        details['condition_H'] = v.passed
        if not v:
            return Verdict(name, False, details=details, certificate=v.certificate, value=h)
    return Verdict(name, True, details=details, value=h)


def _h_constraints(alg, family):
    """Pairs (i, j, l) meaning h(i) = h(j) - l."""
    out = set()
    for j in range(1, alg.r + 1):
        for l, part in six.iteritems(family.graded_parts[j]):
            for i in part:
                out.add((i, j, l))
    return sorted(out)


def exhaustive_heights(alg, family, bound=None):
    """All h with values in 0..bound satisfying (H), by backtracking (bound defaults to 3r)."""
    bound = 3 * alg.r if bound is None else bound
    cons = _h_constraints(alg, family)
    by_vertex = {v: [] for v in range(1, alg.r + 1)}
    for i, j, l in cons:
        by_vertex[max(i, j)].append((i, j, l))
    found = []
    h = {}

    def extend(v):
        if v > alg.r:
            found.append(dict(h))
            return
        for x in range(bound + 1):
            h[v] = x
            if all(h[i] == h[j] - l for i, j, l in by_vertex[v]):
                extend(v + 1)
        del h[v]

    extend(1)
    comps = quiver_components(alg)
    return [HeightFunction(sol, comps) for sol in found]


def delta_arrow_degrees(alg, h):
    degs = {}
    for a, (s, t) in six.iteritems(alg.arrows):
        num = 1 + h[t] - h[s]
        if num % 2 or num < 0:
            raise GradingError("arrow {} gets Delta-degree {}/2".format(a, num))
        degs[a] = num // 2
    return degs


def delta_regrade(alg, h):
    """
    Regrade by deg(e_i L_l e_j) = (l + h(i) - h(j)) / 2.

    Parameters:
    ------------
    alg:  length-graded GradedAlgebra
    h:  HeightFunction satisfying (H)
    """
    dalg = regrade(alg, delta_arrow_degrees(alg, h), tag='delta')
    for b in alg.basis:
        num = b.length + h[b.target] - h[b.source]
        if num % 2 or num < 0 or dalg.degrees[b.index] != num // 2:
            raise GradingError("basis element {} has Delta-degree {}/2".format(b.label, num))
    dalg.height = h
    dalg.origin = alg
    log.debug("Delta-graded dims %s", dalg.dims())
    return dalg


def _grading_key(dalg):
    return dalg.dims(), sorted((k, tuple(dalg.basis[x].label for x in v)) for k, v in dalg.slots.items())


def height_uniqueness(alg, family, bound=None, name='height_uniqueness'):
    """All valid h differ by constants per component and give the same Delta-grading."""
    sols = exhaustive_heights(alg, family, bound)
    if not sols:
        return Verdict(name, False, details={'solutions': 0}, certificate={'reason': 'no height function'})
    base = sols[0]
    ref = delta_regrade(alg, base)
    ref_key = _grading_key(ref)
    cert = None
    for h in sols[1:]:
        for comp in base.components:
            diffs = set(h[v] - base[v] for v in comp)
            if len(diffs) > 1:
                cert = {'h': h.to_dict(), 'reference': base.to_dict(), 'component': comp}
                break
        if cert:
            break
        if _grading_key(delta_regrade(alg, h)) != ref_key:
            cert = {'h': h.to_dict(), 'reference': base.to_dict(), 'reason': 'different Delta-grading'}
            break
    details = {'solutions': len(sols), 'normalized': base.normalized().to_dict(), 'dims': ref.dims()}
    return Verdict(name, cert is None, details=details, certificate=cert)


def transport_module(M, dalg, h, anchor):
    """
    Move a length-graded module into the Delta-grading: (v, d) -> (v, (d + h(v) - h(anchor)) / 2).

    Parameters:
    ------------
    M:  GradedModule over the length-graded algebra
    dalg:  the Delta-graded algebra
    h:  HeightFunction
    anchor:  vertex whose degree-0 part stays in degree 0
    """
    slots = []
    for v, d in M.slots:
        num = d + h[v] - h[anchor]
        if num % 2:
            raise GradingError("{} has no Delta-degree at ({}, {})".format(M.label, v, d))
        slots.append((v, num // 2))
    return GradedModule(dalg, slots, M.action, label=M.label)


def verify_degree_zero_isomorphism(dalg, family=None, name='degree_zero_iso'):
    """
    L_[0] e_j and Delta_j are the same quotient of P_j: the span of Delta-degree >= 1 equals the trace.
    """
    details = {'per_vertex': {}}
    cert = None
    for j in range(1, dalg.r + 1):
        P = projective(dalg, j)
        K = Echelon(dalg.field, [P.unit(k) for k in range(P.dim) if P.degree(k) >= 1])
        U = trace_submodule(P, dalg, j)
        same = len(K) == len(U) and all(U.contains(row) for row in K.basis())
        details['per_vertex'][str(j)] = {'zero_part': P.dim - len(K), 'delta': P.dim - len(U)}
        if not same and cert is None:
            cert = {'vertex': j, 'positive_part_dim': len(K), 'trace_dim': len(U)}
    details['zero_part_dim'] = dalg.dims()[0]
    if family is not None:
        details['delta_dim'] = sum(family.dims())
        if cert is None and details['delta_dim'] != details['zero_part_dim']:
            cert = {'zero_part_dim': details['zero_part_dim'], 'delta_dim': details['delta_dim']}
    return Verdict(name, cert is None, details=details, certificate=cert)


def delta_ext_tables(dalg, dfamily, n_max):
    """(a, b) -> ExtTable of (Delta_a, Delta_b) in the Delta-grading."""
    tables = {}
    for a in range(1, dalg.r + 1):
        res = dfamily.resolution(a, n_max + 1)
        for b in range(1, dalg.r + 1):
            tables[(a, b)] = ext_table(dfamily.delta[a], dfamily.delta[b], n_max, res=res)
    return tables


def check_delta_self_orthogonality(dalg, n_max=None, dfamily=None, name='delta_self_orthogonal'):
    """
    Ext^i(Delta, Delta<j>) = 0 for i != j in the Delta-grading, and L_[0] has finite global dimension.
    """
    n_max = dalg.dim if n_max is None else n_max
    dfamily = dfamily if dfamily is not None else StandardFamily(dalg)
    tables = delta_ext_tables(dalg, dfamily, n_max)
    bigraded = {}
    cert = None
    for (a, b), t in sorted(tables.items()):
        for (n, j), d in sorted(t.dims.items()):
            bigraded[(n, j)] = bigraded.get((n, j), 0) + d
            if n != j and cert is None:
                cert = {'from': a, 'to': b, 'ext_degree': n, 'internal_degree': j, 'dim': d}
    sub = dalg.degree_zero_subalgebra()
    finite = all(minimal_resolution(simple(sub, i), sub.dim).complete for i in range(1, sub.r + 1))
    if not finite and cert is None:
        cert = {'reason': 'degree-0 part has a simple without a finite resolution'}
    details = {'ext': [[n, j, d] for (n, j), d in sorted(bigraded.items())],
               'total': sum(bigraded.values()), 'degree_zero_gldim_finite': finite}
    return Verdict(name, cert is None, details=details, certificate=cert,
                   value={'tables': tables, 'family': dfamily})


def verify_standard_to_simple(alg, h, family, dalg, dfamily=None, n_max=None, name='standard_to_simple'):
    """
    (a) Ext^u(Delta_j, S_i<v>) != 0 only for u = v = h(i) - h(j);
    (b) the Delta_j have linear resolutions in the Delta-grading;
    (c) the injective coresolution of Nabla_j, moved to the Delta-grading, is cogenerated in degree 0.
    """
    n_max = alg.dim if n_max is None else n_max
    dfamily = dfamily if dfamily is not None else StandardFamily(dalg)
    parts = {'a': None, 'b': None, 'c': None}
    for j in range(1, alg.r + 1):
        res = family.resolution(j, n_max + 1)
        for i in range(1, alg.r + 1):
            t = ext_table(family.delta[j], simple(alg, i), n_max, res=res)
            for (u, v) in t.dims:
                if not u == v == h[i] - h[j] and parts['a'] is None:
                    parts['a'] = {'standard': j, 'simple': i, 'ext_degree': u, 'shift': v,
                                  'expected': h[i] - h[j]}
    for j in range(1, alg.r + 1):
        v = is_linear(dfamily.resolution(j, n_max))
        if not v and parts['b'] is None:
            parts['b'] = dict(v.certificate, standard=j)
    if alg.duality is not None:
        for j in range(1, alg.r + 1):
            res = family.resolution(j, n_max)
            for p, P in enumerate(res.terms):
                if not P.summands:
                    continue
                I = transport_module(dualize(P), dalg, h, anchor=j)
                bad = [s for s in socle_slots(I) if s[1] != 0]
                if bad and parts['c'] is None:
                    parts['c'] = {'costandard': j, 'term': p, 'socle': [list(s) for s in bad]}
    details = {k: v is None for k, v in parts.items()}
    details['c_checked'] = alg.duality is not None
    cert = {k: v for k, v in parts.items() if v is not None} or None
    return Verdict(name, cert is None, details=details, certificate=cert)


verify_prop_kazh = verify_standard_to_simple


def delta_nabla(family, dalg, h, i):
    """Nabla_i moved to the Delta-grading, socle in degree 0."""
    return transport_module(family.nabla(i), dalg, h, anchor=i)


def costandard_to_simple_check(dalg, h, family, dfamily, n_max=None, name='costandard_simple'):
    """
    Ext^n(Delta, Nabla_i<j>) vanishes except at (n, j) = (0, 0), where it is one-dimensional.

    Parameters:
    ------------
    dalg:  Delta-graded algebra
    h:  HeightFunction
    family:  StandardFamily of the length-graded algebra (for Nabla_i)
    dfamily:  StandardFamily of dalg
    """
    n_max = dalg.dim if n_max is None else n_max
    cert = None
    details = {}
    for i in range(1, dalg.r + 1):
        N = delta_nabla(family, dalg, h, i)
        total = {}
        for b in range(1, dalg.r + 1):
            t = ext_table(dfamily.delta[b], N, n_max, res=dfamily.resolution(b, n_max + 1))
            for key, d in six.iteritems(t.dims):
                total[key] = total.get(key, 0) + d
        details[str(i)] = [[n, j, d] for (n, j), d in sorted(total.items())]
        off = {k: d for k, d in total.items() if k != (0, 0)}
        if (off or total.get((0, 0), 0) != 1) and cert is None:
            cert = {'costandard': i, 'hom_dim': total.get((0, 0), 0),
                    'nonzero': [[n, j, d] for (n, j), d in sorted(off.items())]}
    return Verdict(name, cert is None, details=details, certificate=cert)

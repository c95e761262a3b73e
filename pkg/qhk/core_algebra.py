# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""
core_algebra:  presentations and finite-dimensional path algebras

A presentation is a quiver with relations, an ordering of the simple modules
and (optionally) a duality involution on the arrows.  build_algebra turns it
into a GradedAlgebra: an explicit basis of kQ/I, degree by degree, together
with the table of left multiplications by arrows.

Conventions:
    paths compose right-to-left, so the written path 'b.a' applies a first;
    internally paths are tuples of arrow names in application order;
    e_i L e_j is spanned by paths from j to i (target i, source j).
"""

from __future__ import print_function, absolute_import, division
import re
import logging
from collections import namedtuple, OrderedDict
import six

from . import linalg
from .linalg import Echelon, axpy
from .exceptions import PresentationError, InfiniteAlgebraError, GradingError
from .qhk import Verdict

log = logging.getLogger(__name__)

BasisElement = namedtuple('BasisElement', ['index', 'target', 'source', 'length', 'path', 'label'])

_ident = r'[A-Za-z_][A-Za-z0-9_]*'
_token = re.compile(r'\s*(?:(?P<sign>[+-])|(?P<coef>\d+(?:\s*/\s*\d+)?)\s*\*'
                    r'|(?P<path>' + _ident + r'(?:\s*\.\s*' + _ident + r')*))')


def path_label(path, vertex=None):
    """Written (right-to-left) label of an application-order path."""
    if not path:
        return 'e{}'.format(vertex)
    return '.'.join(reversed(path))


class AlgebraPresentation(object):
    """
    Quiver with relations, simple ordering and duality.

    Attributes:
        r:  number of vertices (1..r)
        arrows:  OrderedDict name -> (source, target), in declaration order
        relations:  list of relations, each a list of (coefficient, path) with
                    paths in application order
        order:  list of vertices, least first
        duality:  dict arrow -> arrow, or None
        field:  linalg.Field of the coefficients
    """

    def __init__(self, r, arrows, relations, order=None, duality=None, field=None):
        self.r = r
        self.arrows = OrderedDict(arrows)
        self.relations = [list(rel) for rel in relations]
        self.order = list(order) if order is not None else list(range(1, r + 1))
        self.duality = dict(duality) if duality else None
        self.field = field if field is not None else linalg.Field('q')
        self.rank = {a: k for k, a in enumerate(self.arrows)}
        self.pos = {v: k for k, v in enumerate(self.order)}

    def source(self, path, vertex=None):
        return self.arrows[path[0]][0] if path else vertex

    def target(self, path, vertex=None):
        return self.arrows[path[-1]][1] if path else vertex

    def path_key(self, path):
        return tuple(self.rank[a] for a in reversed(path))

    def relation_length(self, rel):
        return len(rel[0][1])

    def max_relation_length(self):
        if not self.relations:
            return 1
        return max(self.relation_length(rel) for rel in self.relations)

    def relation_label(self, rel):
        return format_combination(rel, self.field)

    def dual_path(self, path):
        return tuple(self.duality[a] for a in reversed(path))

    def reordered(self, order):
        check_order(order, self.r)
        return AlgebraPresentation(self.r, self.arrows, self.relations, order, self.duality, self.field)

    def restricted(self, arrow_names):
        """Sub-quiver on the given arrows, keeping the relations that only use them."""
        keep = set(arrow_names)
        arrows = [(a, st) for a, st in six.iteritems(self.arrows) if a in keep]
        rels = [rel for rel in self.relations if all(set(p) <= keep for c, p in rel)]
        duality = None
        if self.duality is not None:
            duality = {a: b for a, b in six.iteritems(self.duality) if a in keep and b in keep}
        return AlgebraPresentation(self.r, arrows, rels, self.order, duality, self.field)

    def to_text(self, header=None):
        lines = []
        if header:
            lines.extend('# ' + h for h in header.splitlines())
        lines.append('vertices: {}'.format(self.r))
        for a, (s, t) in six.iteritems(self.arrows):
            lines.append('arrow {} {} {}'.format(a, s, t))
        for rel in self.relations:
            lines.append('relation {}'.format(self.relation_label(rel)))
        if self.duality:
            done = set()
            for a in self.arrows:
                if a in done:
                    continue
                b = self.duality[a]
                done.update([a, b])
                lines.append('duality {} <-> {}'.format(a, b))
        lines.append('order: {}'.format(' '.join(str(v) for v in self.order)))
        return '\n'.join(lines) + '\n'


def format_combination(terms, field):
    """Render [(coef, path)] as 'a.b - 2*c.d'."""
    out = []
    for k, (c, p) in enumerate(terms):
        s = field.to_string(c)
        neg = s.startswith('-')
        if neg:
            s = s[1:]
        body = path_label(p) if s == '1' else '{}*{}'.format(s, path_label(p))
        if k == 0:
            out.append(('-' if neg else '') + body)
        else:
            out.append(('- ' if neg else '+ ') + body)
    return ' '.join(out) if out else '0'


def check_order(order, r):
    if sorted(order) != list(range(1, r + 1)):
        raise PresentationError("order {} is not a permutation of 1..{}".format(list(order), r))


def _parse_relation(expr, lineno, offset, arrows, field):
    terms = OrderedDict()
    sign, coef, pos, expect_term = 1, None, 0, True
    expr = expr.rstrip()
    while pos < len(expr):
        m = _token.match(expr, pos)
        if m is None or m.end() == pos:
            raise PresentationError("unexpected character '{}'".format(expr[pos:pos + 1].strip() or expr[pos:]),
                                    lineno, offset + pos + 1)
        col = offset + m.start(m.lastgroup) + 1
        if m.group('sign'):
            if coef is not None:
                raise PresentationError("sign after coefficient", lineno, col)
            sign = -sign if m.group('sign') == '-' else sign
            expect_term = True
        elif m.group('coef'):
            if coef is not None:
                raise PresentationError("two coefficients in one term", lineno, col)
            try:
                coef = field.parse(m.group('coef').replace(' ', ''))
            except ValueError as e:
                raise PresentationError(str(e), lineno, col)
        else:
            if not expect_term:
                raise PresentationError("missing '+' or '-' between terms", lineno, col)
            names = [x.strip() for x in m.group('path').split('.')]
            for nm in names:
                if nm not in arrows:
                    raise PresentationError("unknown arrow '{}'".format(nm), lineno, col)
            path = tuple(reversed(names))
            for a, b in zip(path[:-1], path[1:]):
                if arrows[a][1] != arrows[b][0]:
                    raise PresentationError("path '{}' is not composable ({} ends at {}, {} starts at {})"
                                            .format(path_label(path), a, arrows[a][1], b, arrows[b][0]),
                                            lineno, col)
            c = field.from_int(sign) * (coef if coef is not None else field.one)
            terms[path] = terms.get(path, field.zero) + c
            sign, coef, expect_term = 1, None, False
        pos = m.end()
    if expect_term or coef is not None:
        raise PresentationError("relation ends without a term", lineno, offset + len(expr) + 1)
    rel = [(c, p) for p, c in six.iteritems(terms) if c]
    if not rel:
        raise PresentationError("relation is zero", lineno, offset + 1)
    ends = set((arrows[p[0]][0], arrows[p[-1]][1]) for c, p in rel)
    if len(ends) > 1:
        raise PresentationError("relation paths have mismatched endpoints {}".format(sorted(ends)),
                                lineno, offset + 1)
    lengths = set(len(p) for c, p in rel)
    if len(lengths) > 1:
        raise PresentationError("inhomogeneous relation (path lengths {})".format(sorted(lengths)),
                                lineno, offset + 1)
    if min(lengths) < 2:
        raise PresentationError("relation paths must have length >= 2", lineno, offset + 1)
    return rel


def parse_presentation(text, field=None):
    """
    Parse the presentation text format.

    Parameters:
    ------------
    text:  presentation source ('vertices:', 'arrow', 'relation', 'duality', 'order:' lines; '#' comments)
    field:  linalg.Field for the relation coefficients [rationals]
    """
    field = field if field is not None else linalg.Field('q')
    r = None
    arrows = OrderedDict()
    relations = []
    raw_relations = []
    pairs = []
    order = None
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split('#', 1)[0]
        if not body.strip():
            continue
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        word = re.match(r'[A-Za-z_]+', stripped)
        kw = word.group(0).lower() if word else ''
        rest_offset = indent + (word.end() if word else 0)
        rest = stripped[word.end():] if word else stripped
        if kw == 'vertices':
            m = re.match(r'\s*:\s*(\d+)\s*$', rest)
            if m is None or int(m.group(1)) < 1:
                raise PresentationError("expected 'vertices: <positive integer>'", lineno, rest_offset + 1)
            if r is not None:
                raise PresentationError("vertices declared twice", lineno, indent + 1)
            r = int(m.group(1))
        elif kw == 'arrow':
            m = re.match(r'\s+(' + _ident + r')\s+(\d+)\s+(\d+)\s*$', rest)
            if m is None:
                raise PresentationError("expected 'arrow NAME i j'", lineno, rest_offset + 1)
            if r is None:
                raise PresentationError("arrow before 'vertices:'", lineno, indent + 1)
            name, s, t = m.group(1), int(m.group(2)), int(m.group(3))
            if name in arrows:
                raise PresentationError("arrow '{}' declared twice".format(name), lineno, rest_offset + m.start(1) + 1)
            for v, g in ((s, 2), (t, 3)):
                if not 1 <= v <= r:
                    raise PresentationError("vertex {} out of range 1..{}".format(v, r),
                                            lineno, rest_offset + m.start(g) + 1)
            arrows[name] = (s, t)
        elif kw == 'relation':
            raw_relations.append((lineno, rest, rest_offset))
        elif kw == 'duality':
            m = re.match(r'\s+(' + _ident + r')\s*<->\s*(' + _ident + r')\s*$', rest)
            if m is None:
                raise PresentationError("expected 'duality a <-> b'", lineno, rest_offset + 1)
            pairs.append((lineno, rest_offset + m.start(1) + 1, m.group(1), m.group(2)))
        elif kw == 'order':
            m = re.match(r'\s*:((?:\s*\d+)+)\s*$', rest)
            if m is None:
                raise PresentationError("expected 'order: i1 i2 ... ir'", lineno, rest_offset + 1)
            order = [int(x) for x in m.group(1).split()]
            order_line = lineno
        else:
            raise PresentationError("unknown statement '{}'".format(stripped.split()[0]), lineno, indent + 1)
    if r is None:
        raise PresentationError("missing 'vertices:' declaration", 1, 1)
    for lineno, rest, offset in raw_relations:
        relations.append(_parse_relation(rest, lineno, offset, arrows, field))
    duality = None
    if pairs:
        duality = {}
        for lineno, col, a, b in pairs:
            for x in (a, b):
                if x not in arrows:
                    raise PresentationError("unknown arrow '{}' in duality".format(x), lineno, col)
            for x, y in ((a, b), (b, a)):
                if duality.get(x, y) != y:
                    raise PresentationError("duality is not involutive at '{}'".format(x), lineno, col)
                duality[x] = y
            if arrows[a] != tuple(reversed(arrows[b])):
                raise PresentationError("duality {} <-> {} is not endpoint-reversing".format(a, b), lineno, col)
        missing = [a for a in arrows if a not in duality]
        if missing:
            raise PresentationError("duality leaves arrows unpaired: {}".format(', '.join(missing)),
                                    pairs[-1][0], 1)
    if order is not None:
        try:
            check_order(order, r)
        except PresentationError as e:
            raise PresentationError(e.msg, order_line, 1)
    p = AlgebraPresentation(r, arrows, relations, order, duality, field)
    log.debug("parsed presentation: %d vertices, %d arrows, %d relations", r, len(arrows), len(relations))
    return p


def disjoint_union(p, q):
    """Block-diagonal presentation of p and q; q's vertices shift by p.r, clashing arrow names get '_2'."""
    if p.field != q.field:
        raise PresentationError("cannot join presentations over {} and {}".format(p.field.name, q.field.name))
    rename = {}
    for a in q.arrows:
        b = a
        while b in p.arrows or b in rename.values():
            b = b + '_2'
        rename[a] = b
    arrows = list(p.arrows.items())
    arrows += [(rename[a], (s + p.r, t + p.r)) for a, (s, t) in six.iteritems(q.arrows)]
    rels = list(p.relations)
    rels += [[(c, tuple(rename[x] for x in path)) for c, path in rel] for rel in q.relations]
    order = list(p.order) + [v + p.r for v in q.order]
    duality = None
    if p.duality is not None and q.duality is not None:
        duality = dict(p.duality)
        duality.update({rename[a]: rename[b] for a, b in six.iteritems(q.duality)})
    elif p.duality is not None or q.duality is not None:
        log.warning("only one block declares a duality; the union has none")
    return AlgebraPresentation(p.r + q.r, arrows, rels, order, duality, p.field)


class GradedAlgebra(object):
    """
    Finite-dimensional graded algebra kQ/I with an explicit basis.

    Attributes:
        presentation:  the AlgebraPresentation
        basis:  list of BasisElement, ordered by (length, path key)
        left:  dict (arrow, basis index) -> sparse vector, the product arrow * basis element
        degrees:  degree of each basis element in the active grading
        grading_tag:  'length', 'delta', 'h', 'ext' or 'custom'
        arrow_degrees:  dict arrow -> degree
        idempotent:  vertex -> basis index of e_v
        arrow_basis:  arrow -> basis index
        slots:  (target, source, degree) -> list of basis indices
    """

    def __init__(self, presentation, basis, left, degrees=None, grading_tag='length', arrow_degrees=None):
        self.presentation = presentation
        self.field = presentation.field
        self.r = presentation.r
        self.arrows = presentation.arrows
        self.order = presentation.order
        self.pos = presentation.pos
        self.duality = presentation.duality
        self.relations = presentation.relations
        self.basis = basis
        self.left = left
        self.grading_tag = grading_tag
        if arrow_degrees is None:
            arrow_degrees = {a: 1 for a in self.arrows}
        self.arrow_degrees = dict(arrow_degrees)
        if degrees is None:
            degrees = [sum(self.arrow_degrees[a] for a in b.path) for b in basis]
        self.degrees = list(degrees)
        self.idempotent = {}
        self.arrow_basis = {}
        self.slots = {}
        for b in basis:
            if b.length == 0:
                self.idempotent[b.target] = b.index
            elif b.length == 1:
                self.arrow_basis[b.path[0]] = b.index
            self.slots.setdefault((b.target, b.source, self.degrees[b.index]), []).append(b.index)
        self._mult = {}

    def __len__(self):
        return len(self.basis)

    @property
    def dim(self):
        return len(self.basis)

    def max_degree(self):
        return max(self.degrees) if self.degrees else 0

    def dims(self):
        """Dimension of each graded part, degrees 0..max."""
        out = [0] * (self.max_degree() + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    def slot_dims(self):
        return {k: len(v) for k, v in six.iteritems(self.slots)}

    def cartan(self, i, j, degree=None):
        """dim e_i L e_j (in one degree if given)."""
        return sum(n for (t, s, d), n in six.iteritems(self.slot_dims())
                   if t == i and s == j and (degree is None or d == degree))

    def from_source(self, j):
        """Basis indices of L e_j."""
        return [b.index for b in self.basis if b.source == j]

    def apply_path(self, path, vec):
        """Left multiply the sparse vector by the path (application order)."""
        for a in path:
            out = {}
            for b, c in six.iteritems(vec):
                img = self.left.get((a, b))
                if img:
                    axpy(out, c, img)
            vec = out
            if not vec:
                break
        return vec

    def element_of_path(self, path, vertex=None):
        """Normal form of a path (application order); vertex names e_v for the empty path."""
        start = self.presentation.source(path, vertex)
        return self.apply_path(path, {self.idempotent[start]: self.field.one})

    def mult(self, x, y):
        """Product of basis elements x*y (y first) as a sparse vector."""
        key = (x, y)
        if key not in self._mult:
            bx, by = self.basis[x], self.basis[y]
            if bx.source != by.target:
                self._mult[key] = {}
            else:
                self._mult[key] = self.apply_path(bx.path, {y: self.field.one})
        return self._mult[key]

    def multiply(self, u, v):
        out = {}
        for x, cx in six.iteritems(u):
            for y, cy in six.iteritems(v):
                p = self.mult(x, y)
                if p:
                    axpy(out, cx * cy, p)
        return out

    def format_element(self, vec):
        return {self.basis[k].label: self.field.to_string(c) for k, c in sorted(vec.items())}

    def degree_zero_subalgebra(self):
        """The subalgebra spanned by degree-0 basis paths, re-indexed, under the length grading."""
        keep = [b for b in self.basis if self.degrees[b.index] == 0]
        index = {b.index: k for k, b in enumerate(keep)}
        arrows0 = [a for a in self.arrows if self.arrow_degrees[a] == 0]
        basis = [BasisElement(k, b.target, b.source, b.length, b.path, b.label) for k, b in enumerate(keep)]
        left = {}
        for a in arrows0:
            for b in keep:
                if (a, b.index) in self.left:
                    left[(a, index[b.index])] = linalg.restrict(self.left[(a, b.index)], index)
        pres = self.presentation.restricted(arrows0)
        return GradedAlgebra(pres, basis, left)

    def to_dict(self):
        """Deterministic serialization: graded dimensions, basis labels per slot, multiplication table."""
        slots = []
        for (t, s, d) in sorted(self.slots):
            slots.append({'target': t, 'source': s, 'degree': d,
                          'basis': [self.basis[k].label for k in self.slots[(t, s, d)]]})
        table = []
        for x in self.basis:
            for y in self.basis:
                if x.source != y.target:
                    continue
                p = self.mult(x.index, y.index)
                if p:
                    table.append([x.label, y.label, self.format_element(p)])
        return {'field': self.field.name, 'grading': self.grading_tag, 'dim': self.dim,
                'dims': self.dims(), 'slots': slots, 'multiplication': table}


def default_max_len(p):
    return 4 * p.r * p.max_relation_length()


def build_algebra(p, max_len=None):
    """
    Compute a basis of kQ/I degree by degree, with the arrow multiplication table.

    Parameters:
    ------------
    p:  AlgebraPresentation
    max_len:  length cutoff [4 * r * max relation length]
    """
    if max_len is None:
        max_len = default_max_len(p)
    field = p.field
    one = field.one
    basis = []
    left = {}
    levels = []
    level0 = []
    for v in range(1, p.r + 1):
        b = BasisElement(len(basis), v, v, 0, (), path_label((), v))
        basis.append(b)
        level0.append(b.index)
    levels.append(level0)
    by_length = {}
    for rel in p.relations:
        by_length.setdefault(p.relation_length(rel), []).append(rel)
    arrows_from = {}
    for a, (s, t) in six.iteritems(p.arrows):
        arrows_from.setdefault(s, []).append(a)

    def apply_path(path, vec):
        for a in path:
            out = {}
            for b, c in six.iteritems(vec):
                axpy(out, c, left[(a, b)])
            vec = out
        return vec

    length = 0
    while True:
        length += 1
        prev = levels[-1]
        cands = []
        for b in prev:
            for a in arrows_from.get(basis[b].target, []):
                cands.append((a, b))
        cands.sort(key=lambda ab: p.path_key(basis[ab[1]].path + (ab[0],)), reverse=True)
        col = {ab: k for k, ab in enumerate(cands)}
        ech = Echelon(field)
        for m, rels in six.iteritems(by_length):
            if m > length:
                continue
            for rel in rels:
                src = p.arrows[rel[0][1][0]][0]
                for bp in levels[length - m]:
                    if basis[bp].target != src:
                        continue
                    vec = {}
                    for c, path in rel:
                        inner = apply_path(path[:-1], {bp: one})
                        for b, cb in six.iteritems(inner):
                            axpy(vec, c * cb, {col[(path[-1], b)]: one})
                    ech.add(vec)
        free = [k for k in range(len(cands)) if k not in ech.rows]
        free.sort(key=lambda k: p.path_key(basis[cands[k][1]].path + (cands[k][0],)))
        new_index = {}
        level = []
        for k in free:
            a, b = cands[k]
            path = basis[b].path + (a,)
            e = BasisElement(len(basis), p.arrows[a][1], basis[b].source, length, path, path_label(path))
            basis.append(e)
            new_index[k] = e.index
            level.append(e.index)
        for k, (a, b) in enumerate(cands):
            left[(a, b)] = linalg.restrict(ech.reduce({k: one}), new_index)
        log.debug("length %d: %d candidates, %d survive", length, len(cands), len(level))
        if not level:
            break
        if length >= max_len:
            raise InfiniteAlgebraError("no vanishing degree up to length {}: algebra may be "
                                       "infinite-dimensional; raise max_len".format(max_len))
        levels.append(level)
    alg = GradedAlgebra(p, basis, left)
    log.info("built algebra of dimension %d, graded dims %s", alg.dim, alg.dims())
    return alg


def regrade(alg, arrow_degrees, tag='custom'):
    """
    Same algebra, basis re-bucketed by new arrow degrees.

    Parameters:
    ------------
    alg:  GradedAlgebra
    arrow_degrees:  dict arrow -> nonnegative integer
    tag:  grading tag of the result
    """
    missing = [a for a in alg.arrows if a not in arrow_degrees]
    if missing:
        raise GradingError("no degree given for arrows {}".format(', '.join(missing)))
    for a, d in six.iteritems(arrow_degrees):
        if int(d) != d or d < 0:
            raise GradingError("degree of {} must be a nonnegative integer, got {}".format(a, d))
    for rel in alg.relations:
        degs = sorted(set(sum(arrow_degrees[a] for a in path) for c, path in rel))
        if len(degs) > 1:
            raise GradingError("relation {} is inhomogeneous (degrees {})"
                               .format(alg.presentation.relation_label(rel), ' vs '.join(str(d) for d in degs)))
    return GradedAlgebra(alg.presentation, alg.basis, alg.left, grading_tag=tag,
                         arrow_degrees={a: int(arrow_degrees[a]) for a in alg.arrows})


def validate_duality(alg, p=None):
    """Check that reversing paths and renaming arrows by the involution maps the ideal into itself."""
    p = p if p is not None else alg.presentation
    if p.duality is None:
        return Verdict('duality', False, details={'declared': False})
    for rel in p.relations:
        image = [(c, p.dual_path(path)) for c, path in rel]
        rem = {}
        for c, path in image:
            axpy(rem, c, alg.element_of_path(path))
        if rem:
            cert = {'relation': p.relation_label(rel),
                    'image': format_combination(image, p.field),
                    'remainder': alg.format_element(rem)}
            log.info("duality does not preserve the ideal: %s", cert['image'])
            return Verdict('duality', False, details={'declared': True}, certificate=cert)
    return Verdict('duality', True, details={'declared': True, 'relations': len(p.relations)})

# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

"""Exact linear algebra over the active base field.

Vectors are sparse dicts ``{index: coefficient}`` holding only nonzero
entries; coefficients are elements of a sympy domain (``QQ`` or ``GF(p)``).
Matrices are passed around as lists of such column vectors, because almost
every map in the package is known through the images of basis vectors.
Batch reductions go through sympy's ``DomainMatrix``; :class:`Echelon` keeps an
incrementally maintained reduced row echelon basis for span membership.
"""

from __future__ import print_function, absolute_import, division
import re
import six
from sympy import QQ, GF
from sympy.ntheory import isprime
from sympy.polys.matrices import DomainMatrix

from .exceptions import FieldError

_rational = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


class Field(object):
    """
    Base field wrapper.

    Parameters:
    ------------
    spec:  'q' for the rationals or 'p:<prime>' for a prime field
    """

    def __init__(self, spec='q'):
        spec = str(spec).strip().lower()
        if spec in ('q', 'qq'):
            self.domain = QQ
            self.characteristic = 0
            self.name = 'q'
        elif spec.startswith('p:'):
            try:
                p = int(spec[2:])
            except ValueError:
                raise FieldError("bad field specification '{}'".format(spec))
            if not isprime(p):
                raise FieldError("{} is not prime".format(p))
            self.domain = GF(p)
            self.characteristic = p
            self.name = 'p:{}'.format(p)
        else:
            raise FieldError("bad field specification '{}' (use q or p:<prime>)".format(spec))
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "Field('{}')".format(self.name)

    def from_int(self, n):
        return self.domain(int(n))

    def from_rational(self, num, den=1):
        if den == 0:
            raise FieldError("zero denominator")
        if self.characteristic and den % self.characteristic == 0:
            raise FieldError("denominator {} vanishes in {}".format(den, self.name))
        return self.domain(int(num)) / self.domain(int(den))

    def parse(self, text):
        m = _rational.match(text)
        if m is None:
            raise FieldError("'{}' is not an exact rational".format(text))
        den = int(m.group(2)) if m.group(2) else 1
        return self.from_rational(int(m.group(1)), den)

    def to_string(self, x):
        if self.characteristic:
            return str(int(x) % self.characteristic)
        if x.denominator == 1:
            return str(x.numerator)
        return "{}/{}".format(x.numerator, x.denominator)


def axpy(y, a, x):
    """y += a*x in place, keeping y zero-pruned."""
    for k, v in six.iteritems(x):
        t = a * v
        if k in y:
            t = y[k] + t
        if t:
            y[k] = t
        else:
            y.pop(k, None)
    return y


class Echelon(object):
    """
    Reduced row echelon basis of a subspace, grown one vector at a time.

    Rows are keyed by their pivot (smallest index in the support), normalized
    to 1 there and zero at every other pivot.
    """

    def __init__(self, field, vectors=()):
        self.field = field
        self.rows = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def copy(self):
        e = Echelon(self.field)
        e.rows = {p: dict(r) for p, r in six.iteritems(self.rows)}
        return e

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]

    def reduce(self, vec):
        v = dict(vec)
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[p])
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert vec; returns the new pivot, or None if vec was in the span."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = self.field.one / v[p]
        row = {k: c * inv for k, c in six.iteritems(v)}
        for r in six.itervalues(self.rows):
            c = r.get(p)
            if c:
                axpy(r, -c, row)
        self.rows[p] = row
        return p

    def coordinates(self, vec):
        """Coefficients of vec (assumed in the span) on the rows, keyed by pivot."""
        return {p: vec[p] for p in self.rows if p in vec}


def _rref(columns, nrows, field, extra=None):
    """Row reduce the matrix whose columns are given; returns (dok, pivots)."""
    ncols = len(columns) + (1 if extra is not None else 0)
    rows = {}
    for c, col in enumerate(columns):
        for r, v in six.iteritems(col):
            rows.setdefault(r, {})[c] = v
    if extra is not None:
        for r, v in six.iteritems(extra):
            rows.setdefault(r, {})[ncols - 1] = v
    if not rows:
        return {}, ()
    A = DomainMatrix(rows, (nrows, ncols), field.domain)
    R, pivots = A.rref()
    return R.to_dok(), tuple(pivots)


def rank(columns, nrows, field):
    if not columns or not nrows:
        return 0
    return len(_rref(columns, nrows, field)[1])


def nullspace(columns, nrows, field):
    """Basis of {x : sum_c x[c] * columns[c] = 0} as sparse vectors over column indices."""
    ncols = len(columns)
    if not ncols:
        return []
    dok, pivots = _rref(columns, nrows, field)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = {f: field.one}
        for i, p in enumerate(pivots):
            a = dok.get((i, f))
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def solve(columns, nrows, rhs, field):
    """One solution x of sum_c x[c] * columns[c] = rhs, or None; free variables are zero."""
    if not rhs:
        return {}
    if not columns:
        return None
    ncols = len(columns)
    dok, pivots = _rref(columns, nrows, field, extra=rhs)
    if ncols in pivots:
        return None
    x = {}
    for i, p in enumerate(pivots):
        a = dok.get((i, ncols))
        if a:
            x[p] = a
    return x


def restrict(vec, index):
    """Re-key vec through index (a dict old -> new), dropping entries outside it."""
    return {index[k]: v for k, v in six.iteritems(vec) if k in index}

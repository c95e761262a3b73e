# -*- coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license

"""Base module:  QHK
This module defines the verdict value and the base report format.
"""

from __future__ import print_function, absolute_import, division
import json
import gzip
import six

SCHEMA = 'qhk-report/1'


class Verdict(object):
    """
    Outcome of one check.

    Fields:
        name:  name of the check
        passed:  bool
        details:  JSON-friendly dict of the numbers behind the decision
        certificate:  JSON-friendly description of the first obstruction (if any)
        value:  python payload handed to later stages (not serialized)
    """

    def __init__(self, name, passed, details=None, certificate=None, value=None):
        self.name = name
        self.passed = bool(passed)
        self.details = details if details is not None else {}
        self.certificate = certificate
        self.value = value

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        return "Verdict({}, {})".format(self.name, 'pass' if self.passed else 'fail')

    def to_dict(self):
        d = {'name': self.name, 'passed': self.passed, 'details': self.details}
        if self.certificate is not None:
            d['certificate'] = self.certificate
        return d


class QhkReport(object):
    """
    Base report (reads/writes .json or .json.gz files).

    Any field may be omitted or missing.
        schema:  report schema tag
        command:  cli command that produced the report
        source:  input name (fixture name, file name or '-')
        field:  base field ('q' or 'p:<prime>')
        comment:  general comment; reader appends, doesn't overwrite
    """
    # Along with the payload attributes, these are the allowed attributes for json r/w
    direct_attributes = ['schema', 'command', 'source', 'field', 'comment']

    def __init__(self, comment=None, **kwargs):
        for d in self.direct_attributes:
            setattr(self, d, None)
        self.schema = SCHEMA
        self.comment = comment
        for a, b in six.iteritems(kwargs):
            setattr(self, a, b)

    def append_comment(self, comment):
        if comment is None:
            return
        if self.comment is None:
            self.comment = comment
        else:
            self.comment += ('\n' + comment)
        self.comment = self.comment.strip()

    def to_dict(self, payload_attributes=[]):
        ds = {}
        for d in list(self.direct_attributes) + list(payload_attributes):
            val = getattr(self, d, None)
            if val is not None:
                ds[d] = val
        return ds

    def to_json(self, fix_list=True):
        jsd = json.dumps(self.to_dict(), sort_keys=True, indent=4, separators=(',', ':'))
        if fix_list:
            jsd = fix_json_list(jsd)
        return jsd

    def reader(self, filename):
        """
        Read a report written by writer.

        Parameters:
        ------------
        filename:  .json or .json.gz filename to read
        """
        r_open = gzip.open if filename.lower().endswith('.gz') else open
        with r_open(filename, 'rb') as f:
            data = json.loads(f.read().decode('utf-8'))
        for d, val in six.iteritems(data):
            if d == 'comment':
                self.append_comment(val)
            else:
                setattr(self, d, val)
        return data

    def writer(self, filename, fix_list=True):
        jsd = self.to_json(fix_list=fix_list)
        w_open = gzip.open if filename.lower().endswith('.gz') else open
        with w_open(filename, 'wb') as f:
            f.write(jsd.encode('utf-8'))

    def info(self):
        self._info()

    def _info(self, dirlen=60):
        print("QHK Information")
        for d in self.direct_attributes:
            val = getattr(self, d, None)
            if len(str(val)) > dirlen:
                val = str(val)[:dirlen] + ' ......'
            print("\t{}:  {}".format(d, val))


def fix_json_list(jsd):
    """Collapse the whitespace json.dumps puts inside lists (string literals are left alone)."""
    spaces = ['\n', ' ']
    fixed = []
    sb_count = 0
    in_string = False
    escaped = False
    for c in jsd:
        if in_string:
            fixed.append(c)
            if escaped:
                escaped = False
            elif c == '\\':
                escaped = True
            elif c == '"':
                in_string = False
            continue
        if c == '"':
            in_string = True
        elif c == '[':
            sb_count += 1
        elif c == ']':
            sb_count -= 1
        if sb_count and c in spaces:
            continue
        fixed.append(c)
    return ''.join(fixed)

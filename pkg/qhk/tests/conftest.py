# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from __future__ import print_function, division, absolute_import

import pytest

from .. import pipeline


class AnalysisCache(object):
    """Full pipeline runs, one per fixture name, shared by the whole session."""

    def __init__(self):
        self.reports = {}

    def report(self, name):
        key = name.strip().upper()
        if key not in self.reports:
            self.reports[key] = pipeline.cmd_analyze(name)
        return self.reports[key]

    def analysis(self, name):
        return self.report(name).analysis


@pytest.fixture(scope='session')
def analyses():
    return AnalysisCache()

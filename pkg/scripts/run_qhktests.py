#! /usr/bin/env python
# _*_ coding: utf-8 _*_
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license
from __future__ import print_function, division, absolute_import

import os
import sys

import pytest

import qhk

if __name__ == '__main__':
    sys.exit(pytest.main([os.path.join(os.path.dirname(qhk.__file__), 'tests')] + sys.argv[1:]))

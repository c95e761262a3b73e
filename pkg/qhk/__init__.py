# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from .version import __version__
from . import qhk
from . import linalg
from . import core_algebra
from . import graded_modules
from . import homological
from . import quasi_hereditary
from . import delta_koszul
from . import gamma
from . import fixtures
from . import pipeline

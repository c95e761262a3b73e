# -*- mode: python; coding: utf-8 -*-
# Copyright 2026 the qhk developers
# Licensed under the 2-clause BSD license.

from . import test_linalg
from . import test_core_algebra
from . import test_graded_modules
from . import test_homological
from . import test_quasi_hereditary
from . import test_delta_koszul
from . import test_gamma
from . import test_pipeline

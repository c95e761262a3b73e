"""Version definition for qhk."""
import glob

# Format expected by setup.py: string of form "X.Y.Z"
_version_major = 0
_version_minor = 1
_version_micro = ''  # use '' for first of series, number for 1 and above
_version_extra = 'dev'
# _version_extra = ''  # Uncomment this for full releases

# Construct full version string from these.
_ver = [_version_major, _version_minor]
if _version_micro:
    _ver.append(_version_micro)
if _version_extra:
    _ver.append(_version_extra)

__version__ = '.'.join(map(str, _ver))

CLASSIFIERS = ["Development Status :: 3 - Alpha",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: BSD License",
               "Operating System :: OS Independent",
               "Programming Language :: Python",
               "Topic :: Scientific/Engineering :: Mathematics"]

# Description should be a one-liner:
description = "qhk: exact checks for quasi-hereditary and Koszul path algebras"
# Long description will go up on the pypi page
long_description = """
qhk
========
Quasi-hereditary / Koszul toolkit.  Takes a finite dimensional path algebra
presented by a quiver with relations, a simple-module ordering and a duality,
and decides quasi-heredity, standard Koszulity, height functions, the
Delta-regrading, Koszulity with respect to Delta and the Ext-algebra of
standard modules, all in exact arithmetic.
To get started using these components in your own software, please go to the
repository README
License
=======
``qhk`` is licensed under the terms of the BSD license.
"""

NAME = "qhk"
MAINTAINER = "qhk developers"
MAINTAINER_EMAIL = ""
DESCRIPTION = description
LONG_DESCRIPTION = long_description
URL = ""
DOWNLOAD_URL = ""
LICENSE = "BSD"
AUTHOR = "qhk developers"
AUTHOR_EMAIL = ""
PLATFORMS = "OS Independent"
MAJOR = _version_major
MINOR = _version_minor
MICRO = _version_micro
VERSION = __version__
PACKAGES = ['qhk', 'qhk.tests']
SCRIPTS = [p for p in glob.glob('scripts/*') if not p.endswith('~')]
REQUIRES = ["numpy", "six", "sympy"]
INSTALL_REQUIRES = ["numpy", "six", "sympy>=1.13"]
TESTS_REQUIRE = ["pytest", "hypothesis"]

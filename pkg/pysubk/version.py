from __future__ import absolute_import, division, print_function

# Format expected by setup.py: string of form "X.Y.Z"
_version_major = 0
_version_minor = 1
_version_micro = ''  # use '' for first of series, number for 1 and above
_version_extra = ''  # Uncomment this for full releases

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
               "Programming Language :: Python :: 3",
               "Topic :: Scientific/Engineering :: Mathematics"]

# Description should be a one-liner:
description = "pysubk: the sub-k-domination number, its relatives, and an exact k-domination oracle"
NAME = "pysubk"
MAINTAINER = "pysubk developers"
MAINTAINER_EMAIL = ""
DESCRIPTION = description
URL = ""
DOWNLOAD_URL = ""
LICENSE = "3-clause BSD"
AUTHOR = "pysubk developers"
AUTHOR_EMAIL = ""
PLATFORMS = "OS Independent"
MAJOR = _version_major
MINOR = _version_minor
MICRO = _version_micro
VERSION = __version__
REQUIRES = ["numpy", "pandas", "joblib", "toml", "tqdm", "click", "networkx"]
PYTHON_REQUIRES = ">=3.10"

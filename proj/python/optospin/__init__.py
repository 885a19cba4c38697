# Copyright 2026 The Optospin Authors
# SPDX-License-Identifier: Apache-2.0
"""Optically driven radical-pair / triplet-coupler spin dynamics.

The compiled extension carries the full API; this package re-exports it.
When running against a plain CMake build tree (no pip install), point
OPTOSPIN_EXT_DIR at the directory containing the built `_core` module.
"""

import os
import sys

_ext_dir = os.environ.get("OPTOSPIN_EXT_DIR")
if _ext_dir and _ext_dir not in sys.path:
    sys.path.insert(0, _ext_dir)

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:
    if _ext_dir:
        from _core import *  # noqa: F401,F403
        from _core import __version__  # noqa: F401
    else:
        raise

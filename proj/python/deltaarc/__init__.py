# SPDX-License-Identifier: Apache-2.0
"""Architectural delta models: product generation and family-based analysis.

Thin re-export of the compiled extension module. The extension lives inside
this package when installed as a wheel and on sys.path as a top-level module
when running against a plain CMake build tree.
"""

try:
    from ._deltaarc import *  # noqa: F401,F403
except ImportError:
    from _deltaarc import *  # noqa: F401,F403

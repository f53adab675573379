"""Backend selection for the hot kernels.

Prefers the compiled ``_speedups`` extension; falls back to the pure-Python
twin when the extension is missing or ``RIGHTGROUPS_PURE`` is set in the
environment.  Both backends are behaviorally identical (tests enforce it).
"""

import os

from . import _kernels_py

if os.environ.get("RIGHTGROUPS_PURE"):
    _backend = _kernels_py
else:
    try:
        from . import _speedups as _backend
    except ImportError:
        _backend = _kernels_py

BACKEND = _backend.BACKEND

assoc_failure = _backend.assoc_failure
enumerate_associative_tables = _backend.enumerate_associative_tables
sample_associative_tables = _backend.sample_associative_tables
enumerate_group_tables = _backend.enumerate_group_tables
enumerate_homs = _backend.enumerate_homs
condition_flags = _backend.condition_flags

COND_A = _kernels_py.COND_A
COND_B = _kernels_py.COND_B
COND_C = _kernels_py.COND_C
COND_E = _kernels_py.COND_E
COND_F = _kernels_py.COND_F
COND_ALL = _kernels_py.COND_ALL


def available_backends():
    """(name, module) pairs for every importable backend, compiled first."""
    found = []
    try:
        from . import _speedups

        found.append((_speedups.BACKEND, _speedups))
    except ImportError:
        pass
    found.append((_kernels_py.BACKEND, _kernels_py))
    return found

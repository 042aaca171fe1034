"""Kernel backend selection.

The polynomial inner loops (mul / divmod / gcd over F_p and F_{p^e}) exist in
two interchangeable implementations:

* ``numba`` -- @njit-compiled loops, the default when numba imports cleanly;
* ``numpy`` -- pure-numpy fallback, always available.

The environment variable APPELL_CARLITZ_BACKEND picks one explicitly
("numba", "numpy", or "auto"; default "auto").  Tests and benchmarks can also
switch in-process with :func:`use`.  Both backends are exact and are
cross-checked against each other in the test suite.
"""

import os

ENV_VAR = "APPELL_CARLITZ_BACKEND"

_active = None
_active_name = None


def available_backends():
    names = ["numpy"]
    try:
        import numba  # noqa: F401

        names.insert(0, "numba")
    except ImportError:
        pass
    return names


def _load(name):
    if name == "numba":
        from . import _kernels_numba as mod
    elif name == "numpy":
        from . import _kernels_numpy as mod
    else:
        raise ValueError(f"unknown kernel backend {name!r} (use 'numba', 'numpy' or 'auto')")
    return mod


def use(name):
    """Force a backend; returns the previously active name (or None)."""
    global _active, _active_name
    previous = _active_name
    _active = _load(name)
    _active_name = name
    return previous


def kernels():
    """The active kernel module, resolving the env var on first use."""
    global _active, _active_name
    if _active is None:
        choice = os.environ.get(ENV_VAR, "auto").strip().lower()
        if choice == "auto":
            try:
                _active = _load("numba")
                _active_name = "numba"
            except ImportError:
                _active = _load("numpy")
                _active_name = "numpy"
        else:
            _active = _load(choice)
            _active_name = choice
    return _active


def name():
    kernels()
    return _active_name

"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``FASTENT_PURE_PYTHON=1``
to force the pure-Python implementation. Both expose ``q_single``,
``q_many`` and ``linear_sum`` with identical results.
"""

import os

from . import _pykernels as python

compiled = None
if os.environ.get("FASTENT_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

active = compiled if compiled is not None else python
BACKEND = active.BACKEND


def get(name=None):
    """Return a backend module by name (``"compiled"``, ``"python"`` or ``None`` for active)."""
    if name in (None, "auto"):
        return active
    if name == "python":
        return python
    if name == "compiled":
        if compiled is None:
            raise ImportError("compiled kernels are not available; rebuild the package")
        return compiled
    raise ValueError(f"unknown backend {name!r}")


q_single = active.q_single
q_many = active.q_many
linear_sum = active.linear_sum

"""Select the enumeration engine at import time.

The compiled extension (treegen._speedups, built from Cython) is preferred;
the pure-Python twin is the fallback.  Set TREEGEN_ENGINE=python to force
the fallback or TREEGEN_ENGINE=cython to insist on the extension.
"""
import os

_choice = os.environ.get("TREEGEN_ENGINE", "auto").strip().lower()

if _choice in ("python", "py", "pure"):
    from . import _engine_py as _impl
elif _choice in ("cython", "c", "compiled"):
    from . import _speedups as _impl
elif _choice in ("auto", ""):
    try:
        from . import _speedups as _impl
    except ImportError:
        from . import _engine_py as _impl
else:
    raise ImportError("unknown TREEGEN_ENGINE value %r" % _choice)

ENGINE = _impl.ENGINE
TreeNode = _impl.TreeNode
node = _impl.node
join = _impl.join
iter_multisets = _impl.iter_multisets
iter_forests = _impl.iter_forests
iter_rooted = _impl.iter_rooted
iter_free = _impl.iter_free

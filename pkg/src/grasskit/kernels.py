"""Backend selection for the mod-q hot kernels.

The compiled extension ``grasskit._ckernels`` is preferred when it built;
otherwise the pure-Python twin ``grasskit._kernels_py`` is used.  Both
expose the same functions with identical semantics, so every result is
independent of which backend ended up active.
"""

try:
    from . import _ckernels as _impl
except ImportError:  # extension not compiled on this install
    from . import _kernels_py as _impl

rref_mod = _impl.rref_mod
eval_forms_scan = _impl.eval_forms_scan
BACKEND = _impl.backend_name


def available_backends():
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401
        names.append("c")
    except ImportError:
        pass
    return names


def get_backend(name):
    """Return the kernel module for an explicit backend name ("python" or "c")."""
    if name == "python":
        from . import _kernels_py
        return _kernels_py
    if name == "c":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def use(name):
    """Switch the active backend process-wide (used by the benchmark surface)."""
    global rref_mod, eval_forms_scan, BACKEND
    mod = get_backend(name)
    rref_mod = mod.rref_mod
    eval_forms_scan = mod.eval_forms_scan
    BACKEND = mod.backend_name

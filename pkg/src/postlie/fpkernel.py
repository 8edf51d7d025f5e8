"""Backend selector for the finite-field sweep kernels.

Imports the compiled extension when it built, otherwise the vectorized
fallback, and re-exports one uniform API.  `BACKEND` names the active
implementation and `backends()` returns every importable one, which is
what the benchmark script and the equivalence tests iterate over.
"""

try:
    from . import _fpkernel as _impl
except ImportError:
    from . import _fpkernel_py as _impl

BACKEND = _impl.NAME

jacobi_ok = _impl.jacobi_ok
verify_structure = _impl.verify_structure
phi_sweep = _impl.phi_sweep
product_sweep = _impl.product_sweep
gl_invariance_sweep = _impl.gl_invariance_sweep


def backends():
    """All importable kernel implementations, compiled first."""
    mods = []
    try:
        from . import _fpkernel
        mods.append(_fpkernel)
    except ImportError:
        pass
    from . import _fpkernel_py
    mods.append(_fpkernel_py)
    return mods


__all__ = [
    "BACKEND",
    "backends",
    "jacobi_ok",
    "verify_structure",
    "phi_sweep",
    "product_sweep",
    "gl_invariance_sweep",
]

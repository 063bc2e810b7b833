"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the numpy/pure
Python twins in ``_pykernels`` run.  A compiled call that cannot represent
its input in fixed-width integers raises ``OverflowError`` and is retried
on the Python backend, so results never depend on which backend is active.
"""
from __future__ import annotations

import contextlib

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_active = _ckernels if _ckernels is not None else _pykernels


def available() -> list[str]:
    return ["python"] + (["compiled"] if _ckernels is not None else [])


def active() -> str:
    return _active.BACKEND


def set_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _pykernels
    elif name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


@contextlib.contextmanager
def using(name: str):
    previous = active()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _dispatch(name):
    fallback = getattr(_pykernels, name)

    def call(*args):
        try:
            return getattr(_active, name)(*args)
        except OverflowError:
            return fallback(*args)

    call.__name__ = name
    call.__doc__ = fallback.__doc__
    return call


count_linear_extensions = _dispatch("count_linear_extensions")
count_pp_ideals = _dispatch("count_pp_ideals")
enumerate_pp = _dispatch("enumerate_pp")
count_pp_enum = _dispatch("count_pp_enum")
poly_mul_dense = _dispatch("poly_mul_dense")
lattice_tables = _dispatch("lattice_tables")
lattice_axioms = _dispatch("lattice_axioms")
modular_violation = _dispatch("modular_violation")
ad_violation = _dispatch("ad_violation")

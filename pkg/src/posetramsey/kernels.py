"""Backend selection for the search kernels.

The compiled ``_ckernels`` module is used when it was built; otherwise, or
when ``POSETRAMSEY_PURE=1`` is set, the pure-Python ``_pykernels`` run.
Inputs beyond the compiled capacity (64-element bitsets) always go to the
pure-Python versions.
"""
import os

from . import _pykernels

try:
    if os.environ.get("POSETRAMSEY_PURE") == "1":
        raise ImportError("pure backend forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_C_LIMIT = 64


def backends():
    """Available backends as ``{name: module}``."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out


def induced_copy(pat_up, pat_down, host_up, host_down, allowed):
    if _ckernels is not None and len(pat_up) <= _C_LIMIT and len(host_up) <= _C_LIMIT:
        return _ckernels.induced_copy(pat_up, pat_down, host_up, host_down, allowed)
    return _pykernels.induced_copy(pat_up, pat_down, host_up, host_down, allowed)


def avoiding_hom(verts, ymask, preds):
    if _ckernels is not None and len(verts) <= _C_LIMIT and ymask < (1 << 63):
        return _ckernels.avoiding_hom(verts, ymask, preds)
    return _pykernels.avoiding_hom(verts, ymask, preds)


def red_good_copy(red, xmask, ymask):
    if _ckernels is not None and (xmask | ymask) < _C_LIMIT:
        return _ckernels.red_good_copy(red, xmask, ymask)
    return _pykernels.red_good_copy(red, xmask, ymask)


def ramsey_scan(n_ground, pat_up, pat_down, n, start, stop, perm_maps):
    if _ckernels is not None and n_ground <= 5 and len(pat_up) <= _C_LIMIT:
        return _ckernels.ramsey_scan(n_ground, pat_up, pat_down, n, start, stop, perm_maps)
    return _pykernels.ramsey_scan(n_ground, pat_up, pat_down, n, start, stop, perm_maps)

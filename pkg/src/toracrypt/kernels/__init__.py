"""Hot-loop kernels with two interchangeable backends.

The numba backend JIT-compiles the inner scans; the numpy backend is a
vectorized fallback with identical results.  Selection order:

  1. explicit ``set_backend()`` / ``use_backend()`` call,
  2. the ``TORACRYPT_BACKEND`` environment variable ("numba" or "numpy"),
  3. auto: numba when importable, else numpy.
"""

from __future__ import annotations

import contextlib
import os

from . import numpy_impl

ENV_VAR = "TORACRYPT_BACKEND"

_forced: str | None = None
_auto: str | None = None


def _numba_module():
    from . import numba_impl

    return numba_impl


def available_backends() -> tuple[str, ...]:
    try:
        _numba_module()
    except ImportError:
        return ("numpy",)
    return ("numpy", "numba")


def _resolve_auto() -> str:
    global _auto
    env = os.environ.get(ENV_VAR, "").strip().lower()
    if env:
        if env not in ("numpy", "numba"):
            raise ValueError(f"{ENV_VAR} must be 'numpy' or 'numba', got {env!r}")
        if env == "numba":
            _numba_module()  # fail loudly if requested but unavailable
        return env
    if _auto is None:
        _auto = "numba" if "numba" in available_backends() else "numpy"
    return _auto


def active_backend() -> str:
    return _forced if _forced is not None else _resolve_auto()


def set_backend(name: str | None) -> None:
    """Force a backend ("numpy"/"numba"), or None to return to auto."""
    global _forced
    if name is not None:
        if name not in ("numpy", "numba"):
            raise ValueError(f"unknown backend {name!r}")
        if name == "numba":
            _numba_module()
    _forced = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _forced
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _impl():
    return _numba_module() if active_backend() == "numba" else numpy_impl


def els_scan(symbols, pattern, skip):
    """Start indices whose arithmetic progression spells the pattern.

    ``skip`` may be negative (pattern read against stream direction);
    returned starts are ascending.
    """
    if skip == 0:
        raise ValueError("skip must be non-zero")
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    return _impl().els_scan(symbols, pattern, int(skip))


def ngram_counts(symbols, n, skip, alphabet_size):
    """Dense count array over all n-grams with internal stride ``skip``.

    Gram (s[i], s[i+skip], ..) is encoded base-``alphabet_size`` with the
    first symbol most significant, so index order is lexicographic order.
    """
    if n < 1 or skip < 1:
        raise ValueError("n and skip must be >= 1")
    if alphabet_size**n > 16_000_000:
        raise ValueError(f"dense count table for n={n} would be too large")
    return _impl().ngram_counts(symbols, int(n), int(skip), int(alphabet_size))

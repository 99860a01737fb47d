"""Selectable kernels for the modular Burau evaluation.

The hot loop of the Alexander computation evaluates a braid word's
reduced Burau matrix at hundreds of points modulo 62-bit primes and
interpolates the determinant values.  Two interchangeable backends
implement it:

* ``numba`` -- scalar loops compiled with ``numba.njit`` (the default
  when numba imports cleanly);
* ``numpy`` -- pure NumPy, vectorized across sample points.

Both run the identical algorithm in exact Montgomery arithmetic on
``uint64`` limbs and return bit-identical arrays.  Select with the
``TWISTKNOT_BACKEND`` environment variable (``numba`` or ``numpy``) or
per call via the ``backend=`` argument.

Backend module interface::

    det_samples(letters, n, neg, ts, p, npinv, r2, one) -> uint64 array
        t^neg * det(burau(word)(t) - I) mod p at each sample point t.
    interpolate(ys, p, npinv, r2, one) -> uint64 array
        Coefficients mod p of the polynomial through (j+1, ys[j]).
"""

from __future__ import annotations

import os
import warnings

ENV_VAR = "TWISTKNOT_BACKEND"

_cache: dict[str, object] = {}


def mont_constants(p: int) -> tuple[int, int, int, int]:
    """Montgomery constants for an odd modulus p < 2^63 with R = 2^64.

    Returns (p, -p^-1 mod 2^64, 2^128 mod p, 2^64 mod p).
    """
    if p % 2 == 0 or not (2 < p < 1 << 63):
        raise ValueError(f"modulus must be odd and below 2^63, got {p}")
    npinv = (-pow(p, -1, 1 << 64)) % (1 << 64)
    return p, npinv, (1 << 128) % p, (1 << 64) % p


def available_backends() -> list[str]:
    names = []
    try:
        import numba  # noqa: F401
        names.append("numba")
    except ImportError:
        pass
    names.append("numpy")
    return names


def get_backend(name: str | None = None):
    """Resolve a backend module by name, env var, or availability."""
    if name is None:
        name = os.environ.get(ENV_VAR, "").strip().lower() or None
    if name is None:
        name = "numba" if "numba" in available_backends() else "numpy"
    if name in _cache:
        return _cache[name]
    if name == "numba":
        try:
            from . import backend_numba as mod
        except ImportError as exc:
            warnings.warn(f"numba backend unavailable ({exc}); falling back to numpy",
                          RuntimeWarning, stacklevel=2)
            from . import backend_numpy as mod
            name = "numpy"
    elif name == "numpy":
        from . import backend_numpy as mod
    else:
        raise ValueError(f"unknown backend {name!r}; choose 'numba' or 'numpy'")
    _cache[name] = mod
    return mod

"""Integer-order Bessel functions J_n by normalized downward recurrence.

The three-term recurrence J_{n-1} = (2n/x) J_n - J_{n+1} is unstable
upward but stable downward (Miller's algorithm): start well above the
largest requested order with an arbitrary tiny seed, recur down to zero,
and normalize with the identity J_0 + 2*sum_k J_{2k} = 1. Accuracy is
better than 1e-13 relative for orders <= 250 and |x| <= 100 (checked
against an independent implementation in the test suite).
"""

from __future__ import annotations

import math

import numpy as np

_RESCALE = 1e250


def _start_order(nmax: int, x: float) -> int:
    # enough headroom above the turning point for ~1e-17 seed contamination
    n0 = max(nmax, int(math.ceil(abs(x))))
    return n0 + 60 + int(math.sqrt(40.0 * max(n0, 1)))


def jn_array(nmax: int, x: float) -> np.ndarray:
    """J_n(x) for n = 0..nmax as a float array."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    vals = np.zeros(nmax + 1)
    ax = abs(x)
    if ax < 1e-270:
        vals[0] = 1.0
        if nmax >= 1 and x != 0.0:
            vals[1] = 0.5 * x
        return vals

    m = _start_order(nmax, ax)
    jp = 0.0            # J_{n+1} (unnormalized)
    jc = 1e-30          # J_n
    norm = 0.0          # accumulates J_0 + 2*sum J_{2k}
    for n in range(m, 0, -1):
        jm = (2.0 * n / ax) * jc - jp
        jp = jc
        jc = jm
        if n - 1 <= nmax:
            vals[n - 1] = jc
        if (n - 1) % 2 == 0:
            norm += jc if n - 1 == 0 else 2.0 * jc
        if abs(jc) > _RESCALE:
            jp /= _RESCALE
            jc /= _RESCALE
            norm /= _RESCALE
            vals /= _RESCALE
    vals /= norm
    if x < 0.0:
        vals[1::2] *= -1.0
    return vals


def jn_range(nmin: int, nmax: int, x: float) -> np.ndarray:
    """J_n(x) for n = nmin..nmax inclusive; negative orders via J_{-n} = (-1)^n J_n."""
    if nmin > nmax:
        raise ValueError("nmin must be <= nmax")
    top = max(abs(nmin), abs(nmax))
    pos = jn_array(top, x)
    out = np.empty(nmax - nmin + 1)
    for i, n in enumerate(range(nmin, nmax + 1)):
        v = pos[abs(n)]
        out[i] = -v if (n < 0 and n % 2 != 0) else v
    return out


def jn(n: int, x: float) -> float:
    """Single J_n(x)."""
    return jn_range(n, n, x)[0]

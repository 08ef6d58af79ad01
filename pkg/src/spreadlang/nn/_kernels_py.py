"""Pure-numpy convolution kernels (fallback backend).

Semantics shared with the compiled backend:

- windows are all valid positions of a width-w sliding window over the
  embedded document; documents shorter than w are zero-padded to one window
- each filter's activation is ReLU(<filter, window> + bias), max-pooled
  over positions; the winning position index is reported per filter
- the backward pass routes gradient only through the argmax window and
  only where the pooled value is strictly positive (ReLU subgradient 0
  at exactly 0)
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def _windows(emb: np.ndarray, width: int) -> np.ndarray:
    """(T, width*dim) view/copy of all sliding windows, zero-padding short docs."""
    length, dim = emb.shape
    if length < width:
        padded = np.zeros((width, dim), dtype=np.float64)
        padded[:length] = emb
        return padded.reshape(1, width * dim)
    return sliding_window_view(emb, (width, dim)).reshape(-1, width * dim)


def conv_forward(emb, filters, bias, width):
    """Max-pooled ReLU conv activations.

    Returns ``(pooled, argmax)`` with shapes ``(K,)`` and ``(K,)``; argmax is
    the first position attaining the maximum.
    """
    win = _windows(emb, width)
    acts = win @ filters.T + bias
    np.maximum(acts, 0.0, out=acts)
    argmax = acts.argmax(axis=0)
    pooled = acts[argmax, np.arange(filters.shape[0])]
    return pooled, argmax.astype(np.int64)


def conv_backward(emb, filters, d_pooled, pooled, argmax, width, d_emb, d_filters, d_bias):
    """Accumulate gradients for the fused conv/ReLU/max-pool op in place."""
    length, dim = emb.shape
    for k in np.flatnonzero(pooled > 0.0):
        g = d_pooled[k]
        if g == 0.0:
            continue
        t = int(argmax[k])
        rows = min(width, length - t)  # < width only for zero-padded docs
        win = np.zeros(width * dim, dtype=np.float64)
        win[: rows * dim] = emb[t : t + rows].ravel()
        d_filters[k] += g * win
        d_bias[k] += g
        d_emb[t : t + rows] += g * filters[k].reshape(width, dim)[:rows]

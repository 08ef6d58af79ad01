"""Adam optimizer (the only one the training loop uses)."""

from __future__ import annotations

import numpy as np

from .autodiff import Parameter


def adam_step(
    params,
    lr: float = 0.001,
    beta1: float = 0.9,
    beta2: float = 0.999,
    eps: float = 1e-8,
) -> None:
    """One in-place Adam update with bias correction; zeroes gradients after.

    ``params`` is any iterable of :class:`Parameter`; each keeps its own
    moment estimates and step counter.
    """
    for p in params:
        g = p.grad
        p.step += 1
        p.m = beta1 * p.m + (1.0 - beta1) * g
        p.v = beta2 * p.v + (1.0 - beta2) * g * g
        m_hat = p.m / (1.0 - beta1**p.step)
        v_hat = p.v / (1.0 - beta2**p.step)
        p.data -= lr * m_hat / (np.sqrt(v_hat) + eps)
        p.zero_grad()

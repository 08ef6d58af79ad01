"""Minimal reverse-mode autodiff over float64 numpy arrays.

Only the operations needed by the classifier are provided: embedding row
gather, the fused conv/ReLU/max-pool, linear maps, sigmoid, dropout,
concatenation/stacking, and softmax cross-entropy. Graphs are built
eagerly per forward pass; ``Tensor.backward`` walks the tape once.

All data is float64 and C-contiguous so both kernel backends can consume
it directly.
"""

from __future__ import annotations

from contextlib import contextmanager

import numpy as np

from . import kernels

_grad_enabled = True


@contextmanager
def no_grad():
    """Disable graph recording (cheap inference / finite-difference loops)."""
    global _grad_enabled
    prev = _grad_enabled
    _grad_enabled = False
    try:
        yield
    finally:
        _grad_enabled = prev


def _as_array(data) -> np.ndarray:
    return np.ascontiguousarray(data, dtype=np.float64)


class Tensor:
    """A value in the computation graph."""

    __slots__ = ("data", "grad", "_parents", "_backward")

    def __init__(self, data, parents=(), backward=None):
        self.data = _as_array(data)
        self.grad: np.ndarray | None = None
        self._parents: tuple[Tensor, ...] = parents
        self._backward = backward

    @property
    def shape(self):
        return self.data.shape

    def _accum(self, g: np.ndarray) -> None:
        if self.grad is None:
            self.grad = np.zeros_like(self.data)
        self.grad += g

    def backward(self) -> None:
        """Populate gradients of every tensor reachable from this scalar."""
        if not self._parents:
            raise RuntimeError(
                "no computation graph recorded; run a forward pass with "
                "gradients enabled before calling backward()"
            )
        if self.data.size != 1:
            raise ValueError("backward() requires a scalar loss")

        topo: list[Tensor] = []
        visited = {id(self)}
        stack: list[tuple[Tensor, int]] = [(self, 0)]
        while stack:
            node, idx = stack[-1]
            if idx < len(node._parents):
                stack[-1] = (node, idx + 1)
                parent = node._parents[idx]
                if id(parent) not in visited:
                    visited.add(id(parent))
                    stack.append((parent, 0))
            else:
                topo.append(node)
                stack.pop()

        self._accum(np.ones_like(self.data))
        for node in reversed(topo):
            if node._backward is not None and node.grad is not None:
                node._backward(node.grad)


class Parameter(Tensor):
    """A trainable tensor with Adam optimizer state."""

    __slots__ = ("m", "v", "step")

    def __init__(self, data):
        super().__init__(data)
        self.grad = np.zeros_like(self.data)
        self.m = np.zeros_like(self.data)
        self.v = np.zeros_like(self.data)
        self.step = 0

    def zero_grad(self) -> None:
        self.grad[...] = 0.0


def _node(data, parents, backward) -> Tensor:
    if not _grad_enabled:
        return Tensor(data)
    return Tensor(data, parents=tuple(parents), backward=backward)


def _unbroadcast(g: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    while g.ndim > len(shape):
        g = g.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and g.shape[axis] != 1:
            g = g.sum(axis=axis, keepdims=True)
    return g.reshape(shape)


def add(a: Tensor, b: Tensor) -> Tensor:
    def backward(g):
        a._accum(_unbroadcast(g, a.data.shape))
        b._accum(_unbroadcast(g, b.data.shape))

    return _node(a.data + b.data, (a, b), backward)


def mul(a: Tensor, b: Tensor) -> Tensor:
    def backward(g):
        a._accum(_unbroadcast(g * b.data, a.data.shape))
        b._accum(_unbroadcast(g * a.data, b.data.shape))

    return _node(a.data * b.data, (a, b), backward)


def scale(x: Tensor, c: float) -> Tensor:
    def backward(g):
        x._accum(g * c)

    return _node(x.data * c, (x,), backward)


def matvec(a: Tensor, x: Tensor) -> Tensor:
    """(p, q) @ (q,) -> (p,)"""

    def backward(g):
        a._accum(np.outer(g, x.data))
        x._accum(a.data.T @ g)

    return _node(a.data @ x.data, (a, x), backward)


def dot(a: Tensor, b: Tensor) -> Tensor:
    def backward(g):
        a._accum(g * b.data)
        b._accum(g * a.data)

    return _node(a.data @ b.data, (a, b), backward)


def transpose(x: Tensor) -> Tensor:
    def backward(g):
        x._accum(g.T)

    return _node(x.data.T, (x,), backward)


def sigmoid(x: Tensor) -> Tensor:
    s = 1.0 / (1.0 + np.exp(-x.data))

    def backward(g):
        x._accum(g * s * (1.0 - s))

    return _node(s, (x,), backward)


def stack(tensors: list[Tensor]) -> Tensor:
    def backward(g):
        for i, t in enumerate(tensors):
            t._accum(g[i])

    return _node(np.stack([t.data for t in tensors]), tensors, backward)


def concat(tensors: list[Tensor]) -> Tensor:
    sizes = [t.data.shape[0] for t in tensors]

    def backward(g):
        offset = 0
        for t, size in zip(tensors, sizes):
            t._accum(g[offset : offset + size])
            offset += size

    return _node(np.concatenate([t.data for t in tensors]), tensors, backward)


def embedding_rows(table: Tensor, ids) -> Tensor:
    """Gather rows of an embedding table; scatter-adds on backward."""
    ids = np.asarray(ids, dtype=np.int64)

    def backward(g):
        if table.grad is None:
            table.grad = np.zeros_like(table.data)
        np.add.at(table.grad, ids, g)

    return _node(table.data[ids], (table,), backward)


def conv_relu_pool(emb: Tensor, filters: Tensor, bias: Tensor, width: int):
    """Fused convolution + ReLU + max-over-time pooling.

    Returns the pooled ``(K,)`` tensor and the winning window position per
    filter (a plain int64 array; used by the attribution machinery).
    """
    pooled, argmax = kernels.conv_forward(emb.data, filters.data, bias.data, width)

    def backward(g):
        for t in (emb, filters, bias):
            if t.grad is None:
                t.grad = np.zeros_like(t.data)
        kernels.conv_backward(
            emb.data, filters.data, g, pooled, argmax, width,
            emb.grad, filters.grad, bias.grad,
        )

    return _node(pooled, (emb, filters, bias), backward), argmax


def dropout(x: Tensor, rate: float, rng: np.random.Generator, training: bool) -> Tensor:
    """Inverted dropout; identity when evaluating or when rate is 0."""
    if not 0.0 <= rate < 1.0:
        raise ValueError(f"dropout rate must be in [0, 1), got {rate}")
    if not training or rate == 0.0:
        return x
    mask = (rng.random(x.data.shape) >= rate) / (1.0 - rate)

    def backward(g):
        x._accum(g * mask)

    return _node(x.data * mask, (x,), backward)


def softmax_xent(logits: Tensor, target: int):
    """Cross-entropy of softmax(logits) against the target class.

    Returns ``(loss, probabilities)`` with the probabilities as a plain
    array (they are a by-product, not part of the graph).
    """
    shifted = logits.data - logits.data.max()
    exp = np.exp(shifted)
    probs = exp / exp.sum()
    loss = -(shifted[target] - np.log(exp.sum()))

    def backward(g):
        d = probs.copy()
        d[target] -= 1.0
        logits._accum(g * d)

    return _node(loss, (logits,), backward), probs

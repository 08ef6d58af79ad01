"""Parameter initialization, pretrained-embedding loading, checkpoints.

Checkpoint layout: a single-line JSON header (config plus a parameter
manifest with shapes), a newline, then the raw little-endian float64
bytes of every parameter in manifest order. Round trips are bit-exact.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .autodiff import Parameter

EMBEDDING_DIM = 200
EMBED_INIT_BOUND = 0.05

_MAGIC = "spreadlang-checkpoint-v1"


class EmbeddingFileError(ValueError):
    pass


def uniform_init(shape, rng: np.random.Generator, bound: float) -> np.ndarray:
    return rng.uniform(-bound, bound, size=shape)


def glorot_init(shape, rng: np.random.Generator, fan_in: int, fan_out: int) -> np.ndarray:
    bound = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-bound, bound, size=shape)


def load_embeddings(
    path,
    vocab,
    rng: np.random.Generator,
    dim: int = EMBEDDING_DIM,
) -> np.ndarray:
    """Read a text embedding file ("token v1 ... v_dim" per line) into a
    |V| x dim table.

    Rows for vocabulary tokens found in the file are copied verbatim; all
    other rows (missing tokens, special tokens) are drawn uniformly from
    (-0.05, 0.05) with the given generator.
    """
    table = uniform_init((len(vocab), dim), rng, EMBED_INIT_BOUND)
    token_to_id = vocab.token_to_id if hasattr(vocab, "token_to_id") else dict(vocab)
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                raise EmbeddingFileError(f"line {lineno}: no vector values")
            token, values = parts[0], parts[1:]
            if len(values) != dim:
                raise EmbeddingFileError(
                    f"line {lineno}: expected {dim} values, found {len(values)}"
                )
            idx = token_to_id.get(token)
            if idx is None:
                continue
            try:
                table[idx] = [float(v) for v in values]
            except ValueError as exc:
                raise EmbeddingFileError(f"line {lineno}: {exc}") from None
    return table


def save_checkpoint(path, config: dict, params: dict[str, Parameter]) -> None:
    manifest = [{"name": name, "shape": list(p.data.shape)} for name, p in params.items()]
    header = json.dumps(
        {"magic": _MAGIC, "config": config, "params": manifest}, sort_keys=True
    )
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(header.encode("utf-8"))
        fh.write(b"\n")
        for p in params.values():
            fh.write(np.ascontiguousarray(p.data, dtype="<f8").tobytes())


def load_checkpoint(path) -> tuple[dict, dict[str, np.ndarray]]:
    with open(path, "rb") as fh:
        header = json.loads(fh.readline().decode("utf-8"))
        if header.get("magic") != _MAGIC:
            raise ValueError(f"{path}: not a spreadlang checkpoint")
        arrays = {}
        for entry in header["params"]:
            shape = tuple(entry["shape"])
            count = int(np.prod(shape)) if shape else 1
            buf = fh.read(count * 8)
            if len(buf) != count * 8:
                raise ValueError(f"{path}: truncated parameter {entry['name']}")
            arrays[entry["name"]] = np.frombuffer(buf, dtype="<f8").reshape(shape).copy()
    return header["config"], arrays

from .autodiff import (
    Parameter,
    Tensor,
    add,
    concat,
    conv_relu_pool,
    dot,
    dropout,
    embedding_rows,
    matvec,
    mul,
    no_grad,
    scale,
    sigmoid,
    softmax_xent,
    stack,
    transpose,
)
from .kernels import BACKEND, available_backends
from .optim import adam_step
from .weights import (
    EMBEDDING_DIM,
    EmbeddingFileError,
    glorot_init,
    load_checkpoint,
    load_embeddings,
    save_checkpoint,
    uniform_init,
)

__all__ = [
    "BACKEND",
    "EMBEDDING_DIM",
    "EmbeddingFileError",
    "Parameter",
    "Tensor",
    "adam_step",
    "add",
    "available_backends",
    "concat",
    "conv_relu_pool",
    "dot",
    "dropout",
    "embedding_rows",
    "glorot_init",
    "load_checkpoint",
    "load_embeddings",
    "matvec",
    "mul",
    "no_grad",
    "save_checkpoint",
    "scale",
    "sigmoid",
    "softmax_xent",
    "stack",
    "transpose",
    "uniform_init",
]

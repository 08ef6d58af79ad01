"""spreadlang: fake news detection from news text and the language of spreaders.

The package covers the full pipeline:

- ``corpus``: ingestion, normalization, vocabulary and splits
- ``nn``: a small reverse-mode differentiable numeric core (with an
  optional compiled convolution kernel)
- ``model``: the gated dual-module convolutional classifier
- ``harness``: training, grid search, multi-seed evaluation, baselines
- ``stats``: Welch's t test, Spearman correlation
- ``interpret``: filter attribution and linguistic category reports
- ``echograph``: retweet graph, topic vectors, echo-chamber curve
- ``cli``: command-line orchestration
"""

__version__ = "0.1.0"

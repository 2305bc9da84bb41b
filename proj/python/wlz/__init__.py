"""Word-based LZ77/LZSS text compression."""

from ._core import (
    Config,
    ConfigError,
    CorruptError,
    Error,
    compress,
    decompress,
    fetch_corpus,
    known_corpora,
    preset_best,
    tokenize,
)

__all__ = [
    "Config",
    "ConfigError",
    "CorruptError",
    "Error",
    "compress",
    "decompress",
    "fetch_corpus",
    "known_corpora",
    "preset_best",
    "tokenize",
]

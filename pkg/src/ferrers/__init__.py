"""Exact enumerative invariants of Ferrers graphs, with brute-force cross-checks."""

from .core import (
    ABWord, FerrersGraph, Partition, conjugate, graph_from_partition,
    parse_partition, parse_word, partition_to_word, word_to_partition,
)
from .errors import DomainError, FerrersError, ParseError, ResourceLimitError

__version__ = "0.1.0"

__all__ = [
    "ABWord", "FerrersGraph", "Partition", "conjugate", "graph_from_partition",
    "parse_partition", "parse_word", "partition_to_word", "word_to_partition",
    "DomainError", "FerrersError", "ParseError", "ResourceLimitError",
]

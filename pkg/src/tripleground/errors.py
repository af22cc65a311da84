"""Exception hierarchy shared across the toolkit.

Every domain error raised by this package derives from ToolkitError so the
CLI can map them to a single structured stderr line and exit code 1.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all domain errors raised by tripleground."""


class ConfigError(ToolkitError):
    """Invalid or contradictory configuration."""


# --- knowledge-graph persistence ---


class GraphParseError(ToolkitError):
    """A graph file line could not be parsed."""

    def __init__(self, line_number: int, line_text: str, reason: str):
        self.line_number = line_number
        self.line_text = line_text
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class UnknownRelationError(GraphParseError):
    """A record names a relation outside the closed schema."""

    def __init__(self, relation_name: str, line_number: int, line_text: str = ""):
        self.relation_name = relation_name
        super().__init__(line_number, line_text, f"unknown relation {relation_name!r}")


class GraphWriteError(ToolkitError):
    """Writing a graph to a sink failed partway through."""

    def __init__(self, bytes_written: int, cause: Exception):
        self.bytes_written = bytes_written
        super().__init__(f"write failed after {bytes_written} bytes: {cause}")


# --- wiki ingestion ---


class WikiError(ToolkitError):
    """Base class for Wikipedia client failures."""


class PageNotFound(WikiError):
    def __init__(self, title: str, detail: str = "page missing"):
        self.title = title
        super().__init__(f"{title!r}: {detail}")


class DisambiguationPage(WikiError):
    def __init__(self, title: str, options: list[str]):
        self.title = title
        self.options = options
        super().__init__(f"{title!r} is a disambiguation page ({len(options)} options)")


class TransportError(WikiError):
    def __init__(self, attempts: int, cause: Exception | str):
        self.attempts = attempts
        super().__init__(f"transport failed after {attempts} attempts: {cause}")


class CorpusEmpty(WikiError):
    """Every topic in a corpus build failed to fetch."""


class OfflineViolation(ToolkitError):
    """A component attempted a network call while offline mode is active."""

    def __init__(self, what: str):
        super().__init__(f"network access attempted in offline mode: {what}")


# --- embedding / chat providers ---


class EmbeddingError(ToolkitError):
    """Invalid vector data or provider response."""


class ZeroVectorError(EmbeddingError):
    """Cosine similarity is undefined for an all-zero vector."""


class DimensionMismatch(EmbeddingError):
    def __init__(self, a: int, b: int):
        super().__init__(f"embedding dimensions differ: {a} vs {b}")


class CacheModelMismatch(EmbeddingError):
    """Stored embeddings for a model disagree with the provider's dimension."""


class ProviderUnavailable(ToolkitError):
    """A remote provider failed after the configured retries."""


class ReplayMiss(ProviderUnavailable):
    """No recorded completion exists for the requested prompt."""

    def __init__(self, key: str, preview: str):
        self.key = key
        super().__init__(f"no recorded completion for request {key} ({preview!r})")


# --- extraction / grounding ---


class EmptyExtraction(ToolkitError):
    """An extraction call produced no parseable triple candidates."""


class EmptyGraph(ToolkitError):
    """Retrieval requires a non-empty knowledge graph."""


class StrategyFailed(ToolkitError):
    """A grounding strategy failed partway; partial artifacts are attached."""

    def __init__(self, stage: str, cause: Exception, *, scored_triples=(), evidence=(), draft_text=None):
        self.stage = stage
        self.scored_triples = tuple(scored_triples)
        self.evidence = tuple(evidence)
        self.draft_text = draft_text
        super().__init__(f"strategy failed at stage {stage!r}: {cause}")

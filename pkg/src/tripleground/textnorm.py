"""Text normalization helpers shared by the graph, cache, and crawler layers.

Normalization policy: Unicode NFC, strip, collapse all internal whitespace
runs to single spaces. Lowercasing happens only for identity keys (content
hashes, dedup), never for display.
"""

from __future__ import annotations

import hashlib
import re
import unicodedata
from urllib.parse import quote

_CAMEL_RE = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+|[A-Z]+|\d+")


def normalize_text(text: str) -> str:
    """NFC-normalize, trim, and collapse internal whitespace to single spaces."""
    return " ".join(unicodedata.normalize("NFC", text).split())


def identity_key(text: str) -> str:
    """Lowercased normalized form used for hashing and duplicate detection."""
    return normalize_text(text).lower()


def content_hash(*parts: str) -> str:
    """Stable 64-bit content hash (hex) over the given parts.

    Parts are joined with an unprintable separator so ("ab","c") and
    ("a","bc") hash differently.
    """
    h = hashlib.sha256("\x1f".join(parts).encode("utf-8"))
    return h.hexdigest()[:16]


def text_digest(text: str) -> str:
    """Full sha256 hex digest of the normalized text (cache keys)."""
    return hashlib.sha256(normalize_text(text).encode("utf-8")).hexdigest()


def camel_words(name: str) -> tuple[str, ...]:
    """Split a CamelCase identifier into lowercase words.

    "HasNumericValue" -> ("has", "numeric", "value")
    """
    return tuple(m.lower() for m in _CAMEL_RE.findall(name))


def title_slug(title: str) -> str:
    """Filesystem- and URL-safe key for a normalized article title.

    MediaWiki treats the first letter of a title as case-insensitive, so it
    is upcased here; spaces become underscores before percent-encoding.
    """
    t = normalize_text(title)
    if not t:
        raise ValueError("title must be non-empty")
    t = t[0].upper() + t[1:]
    return quote(t.replace(" ", "_"), safe="")

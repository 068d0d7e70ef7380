"""Registrable-domain (eTLD+1) extraction via public-suffix rules.

Implements the standard public-suffix matching algorithm (exact, wildcard
``*`` and exception ``!`` rules, longest match wins, default rule ``*``)
over a bundled snapshot of common suffixes.  The snapshot is a strict
subset of the full public suffix list; swap in a complete list file via
:meth:`PublicSuffixList.from_file` for production crawls.
"""

from __future__ import annotations

import re
from functools import lru_cache
from importlib import resources
from pathlib import Path
from urllib.parse import urlsplit

__all__ = ["PublicSuffixList", "etld1", "host_of"]

_IPV4_RE = re.compile(r"^\d{1,3}(\.\d{1,3}){3}$")


class PublicSuffixList:
    """Suffix rule set supporting exact, wildcard and exception rules."""

    def __init__(self, rules: list[str]) -> None:
        self._exact: set[tuple[str, ...]] = set()
        self._wildcard: set[tuple[str, ...]] = set()  # labels after the "*"
        self._exception: set[tuple[str, ...]] = set()
        for raw in rules:
            rule = raw.strip().lower()
            if not rule or rule.startswith("//"):
                continue
            if rule.startswith("!"):
                self._exception.add(tuple(rule[1:].split(".")))
            elif rule.startswith("*."):
                self._wildcard.add(tuple(rule[2:].split(".")))
            else:
                self._exact.add(tuple(rule.split(".")))

    @classmethod
    def from_file(cls, path: str | Path) -> "PublicSuffixList":
        text = Path(path).read_text(encoding="utf-8")
        return cls(text.splitlines())

    @classmethod
    def bundled(cls) -> "PublicSuffixList":
        return _bundled()

    def public_suffix(self, host: str) -> str | None:
        """Return the public suffix of ``host``, or None for non-domains."""
        labels = _normalize_host(host)
        if labels is None:
            return None
        # Exception rules prevail; otherwise the longest matching rule wins,
        # falling back to the implicit "*" rule (the bare TLD).
        best = 1
        for i in range(len(labels)):
            cand = tuple(labels[i:])
            if cand in self._exception:
                return ".".join(cand[1:]) if len(cand) > 1 else None
            if cand in self._exact:
                best = max(best, len(cand))
            elif len(cand) >= 2 and cand[1:] in self._wildcard:
                best = max(best, len(cand))
        return ".".join(labels[-best:])

    def registrable_domain(self, host: str) -> str | None:
        """eTLD+1 of ``host``; None when host is itself a public suffix."""
        labels = _normalize_host(host)
        if labels is None:
            return None
        suffix = self.public_suffix(host)
        if suffix is None:
            return None
        n = len(suffix.split("."))
        if len(labels) <= n:
            return None
        return ".".join(labels[-(n + 1):])


def _normalize_host(host: str) -> list[str] | None:
    host = host.strip().lower().rstrip(".")
    if host.startswith("["):  # IPv6 literal
        return None
    if ":" in host:
        host = host.split(":", 1)[0]
    if not host or _IPV4_RE.match(host):
        return None
    labels = host.split(".")
    if any(not label for label in labels):
        return None
    return labels


def host_of(url_or_host: str) -> str | None:
    """Extract the hostname from a URL, tolerating bare hostnames."""
    s = url_or_host.strip()
    if "://" in s:
        return urlsplit(s).hostname
    if s.startswith("//"):
        return urlsplit("http:" + s).hostname
    # Bare host, possibly with a path glued on.
    return s.split("/", 1)[0].split(":", 1)[0] or None


def etld1(url_or_host: str, psl: PublicSuffixList | None = None) -> str | None:
    """Registrable domain of a URL or hostname, or None if undeterminable."""
    host = host_of(url_or_host)
    if not host:
        return None
    return (psl or _bundled()).registrable_domain(host)


@lru_cache(maxsize=1)
def _bundled() -> PublicSuffixList:
    text = resources.files("gptaudit.data").joinpath("public_suffixes.dat").read_text("utf-8")
    return PublicSuffixList(text.splitlines())

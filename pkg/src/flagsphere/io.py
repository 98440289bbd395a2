"""Reading and writing complexes.

JSON: ``{"vertices": [...], "facets": [[...], ...]}`` with facets in their
stored order.  Plain text: one facet per line, labels separated by
whitespace, ``#`` starts a comment.  ``"-"`` stands for stdin/stdout.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .complex import SimplicialComplex, from_facets

__all__ = ["dumps", "loads", "parse_text", "read_complex", "write_complex"]


def dumps(C: SimplicialComplex) -> str:
    data = {"vertices": C.vertices, "facets": C.facet_lists()}
    return json.dumps(data, indent=None, separators=(", ", ": ")) + "\n"


def loads(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON complex: {exc}") from exc
    if not isinstance(data, dict) or "facets" not in data:
        raise ValueError('JSON complex needs a "facets" list')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ValueError('"facets" must be a list of label lists')
    labels = data.get("vertices")
    if labels is None:
        labels = []
        for f in facets:
            labels.extend(lab for lab in f if lab not in labels)
    return from_facets([str(lab) for lab in labels], [[str(x) for x in f] for f in facets])


def parse_text(text: str) -> SimplicialComplex:
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            facets.append(line.split())
    labels: list[str] = []
    seen: set[str] = set()
    for f in facets:
        for lab in f:
            if lab not in seen:
                seen.add(lab)
                labels.append(lab)
    return from_facets(labels, facets)


def read_complex(path: str | Path) -> SimplicialComplex:
    """Read JSON, falling back to the plain-text format."""
    text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        return loads(text)
    return parse_text(text)


def write_complex(C: SimplicialComplex, path: str | Path = "-") -> None:
    text = dumps(C)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)

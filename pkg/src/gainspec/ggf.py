"""Reader and writer for the plain-text GGF gain graph format.

::

    # comment
    gaingraph 3
    0 1 1.0 0.0
    1 2 0.0 1.0
"""

from __future__ import annotations

import io
import os
from typing import TextIO

from .core import GainGraph
from .errors import InputError, ParseError


def loads(text: str) -> GainGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "gaingraph":
                raise ParseError(f"line {lineno}: expected 'gaingraph <n>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 4:
            raise ParseError(f"line {lineno}: expected 'u v re im', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            re, im = float(parts[2]), float(parts[3])
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse {line!r}") from None
        edges.append((u, v, complex(re, im)))
    if n is None:
        raise ParseError("missing 'gaingraph <n>' header")
    try:
        return GainGraph(n, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def load(source: str | os.PathLike | TextIO) -> GainGraph:
    if hasattr(source, "read"):
        return loads(source.read())
    with open(source, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(g: GainGraph, comment: str | None = None) -> str:
    out = io.StringIO()
    if comment:
        for line in comment.splitlines():
            out.write(f"# {line}\n")
    out.write(f"gaingraph {g.n}\n")
    for u, v, gain in g.edges:
        out.write(f"{u} {v} {gain.real:.17g} {gain.imag:.17g}\n")
    return out.getvalue()


def dump(g: GainGraph, dest: str | os.PathLike | TextIO, comment: str | None = None) -> None:
    text = dumps(g, comment)
    if hasattr(dest, "write"):
        dest.write(text)
        return
    with open(dest, "w", encoding="utf-8") as fh:
        fh.write(text)

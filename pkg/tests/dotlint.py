"""Minimal DOT tokenizer/parser used to validate emitted diagrams.

Supports exactly the subset the renderer emits: an undirected ``graph``
block of attribute, node, and edge statements with quoted identifiers.
"""

from __future__ import annotations


def tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch == '"':
            j = i + 1
            out = []
            while j < len(text) and text[j] != '"':
                if text[j] == "\\" and j + 1 < len(text):
                    out.append(text[j + 1])
                    j += 2
                else:
                    out.append(text[j])
                    j += 1
            if j >= len(text):
                raise ValueError("unterminated quoted string")
            tokens.append('"' + "".join(out))
            i = j + 1
        elif ch in "{}[];=,":
            tokens.append(ch)
            i += 1
        elif text.startswith("--", i):
            tokens.append("--")
            i += 2
        else:
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] in "._-#"):
                j += 1
            if j == i:
                raise ValueError(f"unexpected character {ch!r} at {i}")
            tokens.append(text[i:j])
            i = j
    return tokens


def parse_graph(text: str) -> dict:
    """Parse a DOT graph document; returns nodes, edges, and attributes.

    Raises ValueError on anything that is not a well-formed undirected
    graph in the emitted subset.
    """
    tokens = tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of document")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        pos += 1
        return tok

    def unquote(tok):
        return tok[1:] if tok.startswith('"') else tok

    def parse_attrs():
        attrs = {}
        take("[")
        while peek() != "]":
            name = unquote(take())
            take("=")
            attrs[name] = unquote(take())
            if peek() == ",":
                take(",")
        take("]")
        return attrs

    take("graph")
    if peek() != "{":
        take()  # optional graph name
    take("{")
    nodes: dict[str, dict] = {}
    edges: list[tuple[str, str, dict]] = []
    graph_attrs: dict[str, str] = {}
    while peek() != "}":
        first = unquote(take())
        if peek() == "=":  # graph-level attribute
            take("=")
            graph_attrs[first] = unquote(take())
        elif peek() == "--":
            take("--")
            other = unquote(take())
            attrs = parse_attrs() if peek() == "[" else {}
            edges.append((first, other, attrs))
        else:
            attrs = parse_attrs() if peek() == "[" else {}
            nodes[first] = attrs
        take(";")
    take("}")
    if pos != len(tokens):
        raise ValueError("trailing tokens after graph block")
    return {"nodes": nodes, "edges": edges, "graph_attrs": graph_attrs}

"""Family JSON / text formats.

JSON: ``{"n": int, "k": int, "sets": [[int, ...], ...]}`` with 1-indexed
ascending elements and ascending set order (the canonical storage order).

Text: a header line ``"n k"`` followed by one set per line, elements
comma-separated.  Blank lines and ``#`` comments are ignored on input.
"""
from __future__ import annotations

import json
from pathlib import Path

from .family import Family, elements_of, make_family


def family_to_dict(F: Family) -> dict:
    return {"n": F.n, "k": F.k, "sets": F.as_lists()}


def family_from_dict(d: dict) -> Family:
    try:
        n, k, sets = int(d["n"]), int(d["k"]), d["sets"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"family JSON needs keys n, k, sets: {exc}") from None
    return make_family(n, k, sets)


def dumps_family(F: Family) -> str:
    return json.dumps(family_to_dict(F))


def loads_family(text: str) -> Family:
    return family_from_dict(json.loads(text))


def family_to_text(F: Family) -> str:
    lines = [f"{F.n} {F.k}"]
    lines += [",".join(map(str, s)) for s in F.as_lists()]
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> Family:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty family text: missing 'n k' header")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {rows[0]!r}; expected 'n k'")
    n, k = int(head[0]), int(head[1])
    sets = []
    for row in rows[1:]:
        sets.append([int(x) for x in row.replace(" ", "").split(",") if x])
    return make_family(n, k, sets)


def read_family(path: str | Path) -> Family:
    """Read a family file; JSON if it parses as a JSON object, text otherwise."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_family(text)
    return family_from_text(text)


def write_family(F: Family, path: str | Path, fmt: str = "json") -> None:
    body = dumps_family(F) + "\n" if fmt == "json" else family_to_text(F)
    Path(path).write_text(body)


def mask_list(masks) -> list[list[int]]:
    return [elements_of(m) for m in masks]

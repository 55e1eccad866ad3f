"""Family files: a plain-text certificate format for families of subspaces.

::

    # comment lines start with '#'
    q n m
    k
    <k rows of n space-separated codes, in RREF>

    k
    ...

Blocks are separated by a blank line.  Reading is strict: a block that is
not already in reduced row echelon form is rejected rather than
canonicalised, since the file is meant to be checkable by hand.
"""

from __future__ import annotations

import os
from typing import Iterator

from .errors import DuplicateMember, NotCanonical, ParseError, QOddtownError
from .family import Family
from .field import make_field
from .subspace import Subspace, canonicalize


def format_family(f: Family) -> str:
    lines = [f"{f.field.q} {f.n} {len(f)}"]
    for i, a in enumerate(f.members):
        if i:
            lines.append("")
        lines.append(str(a.k))
        lines += [" ".join(str(x) for x in row) for row in a.basis]
    return "\n".join(lines) + "\n"


def write_family_file(f: Family, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_family(f))


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_family(text: str) -> Family:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty family file", 1) from None
    vals = _ints(header, lineno)
    if len(vals) != 3:
        raise ParseError("header must be 'q n m'", lineno)
    q, n, m = vals
    if n < 0 or m < 0:
        raise ParseError("n and m must be nonnegative", lineno)
    try:
        field = make_field(q)
    except QOddtownError as exc:
        raise ParseError(str(exc), lineno) from None

    members: list[Subspace] = []
    seen: dict[Subspace, int] = {}
    for block in range(m):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"expected {m} blocks, found {block}", None) from None
        kv = _ints(tokens, lineno)
        if len(kv) != 1 or not 0 <= kv[0] <= n:
            raise ParseError(f"block {block}: expected a dimension 0..{n}", lineno)
        k = kv[0]
        start = lineno
        rows = []
        for _ in range(k):
            try:
                lineno, tokens = next(lines)
            except StopIteration:
                raise ParseError(f"block {block} ends early", None) from None
            row = _ints(tokens, lineno)
            if len(row) != n:
                raise ParseError(f"row has {len(row)} entries, expected {n}", lineno)
            if any(not 0 <= x < q for x in row):
                raise ParseError(f"code outside 0..{q - 1}", lineno)
            rows.append(tuple(row))
        sub = canonicalize(field, n, rows)
        if sub.basis != tuple(rows):
            raise NotCanonical(block, start)
        if sub in seen:
            raise DuplicateMember(seen[sub], block)
        seen[sub] = block
        members.append(sub)
    for lineno, _ in lines:
        raise ParseError(f"content after the {m} declared blocks", lineno)
    return Family(field, n, tuple(members))


def read_family_file(path: str | os.PathLike) -> Family:
    with open(path, encoding="ascii") as fh:
        return parse_family(fh.read())

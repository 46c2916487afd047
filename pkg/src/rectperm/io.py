"""Permuton file formats.

Two formats are accepted:

* dense CSV — n lines of n comma-separated reals. File row r holds y-index
  r (bottom-up) and column c holds x-index c, i.e. entry (r, c) of the file
  is ``cells[c][r]``.
* permutation — a file starting with the token ``perm:`` followed by n
  space-separated 0-based indices (whitespace and line breaks are free).

CSV output uses 17 significant digits so a gen -> parse round trip is
cellwise identical.
"""

from __future__ import annotations

import os

import numpy as np

from .core import GridPermuton, from_permutation
from .errors import FormatError, IoError, NotAPermutation, NotAPermuton, PermutonError


def parse_permuton_file(path: str) -> GridPermuton:
    """Read and validate a permuton from either supported format."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("perm:"):
        return _parse_perm(stripped, path)
    return _parse_csv(text, path)


def _parse_perm(text: str, path: str) -> GridPermuton:
    body = text[len("perm:"):]
    try:
        indices = [int(tok) for tok in body.split()]
    except ValueError as exc:
        raise FormatError(f"{path}: non-integer entry in permutation: {exc}") from exc
    try:
        return from_permutation(indices)
    except NotAPermutation as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _parse_csv(text: str, path: str) -> GridPermuton:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        fields = line.split(",")
        try:
            rows.append([float(tok) for tok in fields])
        except ValueError:
            bad = next(i for i, tok in enumerate(fields) if not _is_float(tok))
            raise FormatError(f"{path}: line {lineno}, column {bad + 1}: not a number")
    if not rows:
        raise FormatError(f"{path}: empty file")
    n = len(rows)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != n:
            raise FormatError(
                f"{path}: line {lineno} has {len(row)} fields, expected {n} (square matrix)"
            )
    # file row r = y-index r, file column c = x-index c
    cells = np.array(rows, dtype=float).T
    try:
        return GridPermuton(cells)
    except NotAPermuton as exc:
        raise FormatError(f"{path}: not a grid permuton: {exc}") from exc


def _is_float(tok: str) -> bool:
    try:
        float(tok)
        return True
    except ValueError:
        return False


def format_csv(mu: GridPermuton) -> str:
    n = mu.n
    lines = []
    for r in range(n):  # y-index, bottom-up
        lines.append(",".join(f"{mu.cells[c, r]:.17g}" for c in range(n)))
    return "\n".join(lines) + "\n"


def write_permuton_csv(mu: GridPermuton, path: str) -> None:
    write_text(format_csv(mu), path)


def write_text(text: str, path: str) -> None:
    try:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc

"""Binary codes as column supports, plus the two on-disk formats.

Text format: line 1 is ``N t``, followed by N rows of t characters from
{0, 1}; entry (i, j) is row i of column j.  JSON format: an object with
``n_rows`` and ``columns``, the latter a list of sorted 0-based row-index
arrays.  Both round-trip bit-exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

__all__ = ["BinaryCode", "Witness", "CodeFormatError"]


class CodeFormatError(ValueError):
    """A code file does not parse under either supported format."""


@dataclass(frozen=True)
class BinaryCode:
    """An N x t binary matrix stored as t column supports."""

    n_rows: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_rows < 1:
            raise ValueError("n_rows must be >= 1")
        if len(self.columns) < 1:
            raise ValueError("a code needs at least one column")
        for support in self.columns:
            if len(set(support)) != len(support):
                raise ValueError(f"duplicate rows in support {support!r}")
            if any(not 0 <= r < self.n_rows for r in support):
                raise ValueError(f"support {support!r} outside rows 0..{self.n_rows - 1}")
            if tuple(sorted(support)) != support:
                raise ValueError("supports must be sorted tuples; use from_columns")

    @classmethod
    def from_columns(cls, n_rows: int, columns: Iterable[Iterable[int]]) -> "BinaryCode":
        return cls(n_rows, tuple(tuple(sorted(set(col))) for col in columns))

    @classmethod
    def from_masks(cls, n_rows: int, masks: Sequence[int]) -> "BinaryCode":
        cols = []
        for m in masks:
            cols.append(tuple(i for i in range(n_rows) if m >> i & 1))
        return cls(n_rows, tuple(cols))

    @classmethod
    def identity(cls, n: int) -> "BinaryCode":
        return cls(n, tuple((i,) for i in range(n)))

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for col in self.columns:
            m = 0
            for r in col:
                m |= 1 << r
            out.append(m)
        return tuple(out)

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        for i in range(self.n_rows):
            lines.append("".join("1" if i in set(c) else "0" for c in self.columns))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BinaryCode":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CodeFormatError("empty code file")
        head = lines[0].split()
        if len(head) != 2:
            raise CodeFormatError(f"malformed header {lines[0]!r}: expected 'N t'")
        try:
            n_rows, n_cols = int(head[0]), int(head[1])
        except ValueError as exc:
            raise CodeFormatError(f"malformed header {lines[0]!r}") from exc
        if n_rows < 1 or n_cols < 1:
            raise CodeFormatError("header dimensions must be positive")
        if len(lines) != n_rows + 1:
            raise CodeFormatError(f"expected {n_rows} rows, found {len(lines) - 1}")
        cols: list[list[int]] = [[] for _ in range(n_cols)]
        for i, line in enumerate(lines[1 : n_rows + 1]):
            row = line.strip()
            if len(row) != n_cols or set(row) - {"0", "1"}:
                raise CodeFormatError(f"row {i} is not {n_cols} characters of 0/1: {row!r}")
            for j, ch in enumerate(row):
                if ch == "1":
                    cols[j].append(i)
        return cls(n_rows, tuple(tuple(c) for c in cols))

    def to_json_obj(self) -> dict:
        return {"n_rows": self.n_rows, "columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BinaryCode":
        try:
            return cls.from_columns(int(obj["n_rows"]), obj["columns"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CodeFormatError(f"bad JSON code object: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "BinaryCode":
        text = Path(path).read_text()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            try:
                return cls.from_json_obj(json.loads(text))
            except json.JSONDecodeError as exc:
                raise CodeFormatError(f"bad JSON in {path}: {exc}") from exc
        return cls.from_text(text)

    def save(self, path: str | Path, fmt: str = "text") -> None:
        p = Path(path)
        if fmt == "text":
            p.write_text(self.to_text())
        elif fmt == "json":
            p.write_text(json.dumps(self.to_json_obj(), indent=1) + "\n")
        else:
            raise ValueError(f"unknown code format {fmt!r}")


@dataclass(frozen=True)
class Witness:
    """A counterexample certificate for one failed code property.

    For cover-free violations ``set_s``/``set_l`` are the covering and
    covered sides; for list-decoding, ``set_s`` is the covering s-set and
    ``set_l`` the covered outsiders; for plan violations they are the two
    subsets with equal unions (which need not be disjoint).
    """

    kind: str
    set_s: tuple[int, ...]
    set_l: tuple[int, ...]
    detail: dict

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "set_s": list(self.set_s),
            "set_l": list(self.set_l),
            "detail": dict(self.detail),
        }

"""Loader for the packaged table of series data on small plane graphs.

The CSV shipped under ``stable_jones/fixtures/`` records, for each rooted
plane graph in the reference tables: its id, the five induced-count columns
(when present), the first five infinite-product exponents, the name of the
associated alternating link, and the series coefficients through order 5.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from importlib import resources

__all__ = ["FixtureMissing", "TableRow", "load_table_rows"]


class FixtureMissing(RuntimeError):
    """The packaged fixture CSV is absent or unreadable."""


_ID_RE = re.compile(r"^(Gv|G)\^(\d+)_(\d+)$")


@dataclass(frozen=True)
class TableRow:
    """One row of the reference tables.

    ``family`` is ``"G"`` for rows indexed by edge count and ``"Gv"`` for
    rows indexed by vertex count; ``size`` is the superscript and ``index``
    the subscript of the id.  ``counts`` holds (c1, c2, c3, c41, c42) when
    the row lists them, else ``None``.  ``exponents`` holds (C1..C5) and
    ``phi`` the series coefficients of q^0..q^5.
    """

    graph_id: str
    family: str
    size: int
    index: int
    counts: tuple[int, int, int, int, int] | None
    exponents: tuple[int, int, int, int, int]
    link_name: str
    phi: tuple[int, int, int, int, int, int]


def _parse_row(rec: dict[str, str]) -> TableRow:
    gid = rec["graph_id"].strip()
    m = _ID_RE.match(gid)
    if not m:
        raise FixtureMissing(f"malformed graph id in fixture: {gid!r}")
    family, size, index = m.group(1), int(m.group(2)), int(m.group(3))
    c_cells = [rec[k].strip() for k in ("c1", "c2", "c3", "c41", "c42")]
    if any(c_cells):
        if not all(c_cells):
            raise FixtureMissing(f"row {gid}: partial count columns")
        counts = tuple(int(x) for x in c_cells)
    else:
        counts = None
    exponents = tuple(int(rec[k]) for k in ("C1", "C2", "C3", "C4", "C5"))
    phi = tuple(int(rec[f"phi{i}"]) for i in range(6))
    return TableRow(gid, family, size, index, counts, exponents,
                    rec["link_name"].strip(), phi)


def load_table_rows() -> tuple[TableRow, ...]:
    """All rows of the packaged reference table, in file order."""
    try:
        path = resources.files("stable_jones") / "fixtures" / "tables.csv"
        text = path.read_text(encoding="utf-8")
    except (FileNotFoundError, ModuleNotFoundError, OSError) as exc:
        raise FixtureMissing("fixture CSV not found in package data") from exc
    rows = [_parse_row(rec) for rec in csv.DictReader(text.splitlines())]
    if not rows:
        raise FixtureMissing("fixture CSV is empty")
    return tuple(rows)

"""Column-oriented CSV tables with lossless float round-tripping.

Format: one header row of unique column names, then comma-separated data rows.
Floats are written with ``repr``, which emits the shortest decimal string that
parses back to the identical double — write/read is bit-exact, and writing the
same table twice produces byte-identical files.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .series_stats import Series

__all__ = ["CsvTable", "read_csv", "write_csv"]


@dataclass(frozen=True)
class CsvTable:
    """Named, equal-length, finite float64 columns."""

    header: tuple
    columns: tuple

    def __post_init__(self):
        header = tuple(str(name) for name in self.header)
        if not header:
            raise ValueError("table needs at least one column")
        if len(set(header)) != len(header):
            raise ValueError(f"column names must be unique, got {header!r}")
        if any(not name for name in header):
            raise ValueError("column names must be non-empty")
        if len(self.columns) != len(header):
            raise ValueError(
                f"{len(header)} names but {len(self.columns)} columns"
            )
        columns = []
        for name, col in zip(header, self.columns):
            arr = np.array(col, dtype=np.float64, order="C", copy=True)
            if arr.ndim != 1:
                raise ValueError(f"column {name!r} must be 1-d")
            if not np.isfinite(arr).all():
                raise ValueError(f"column {name!r} contains non-finite values")
            arr.setflags(write=False)
            columns.append(arr)
        n = columns[0].shape[0]
        if n < 2:
            raise ValueError("table needs at least 2 rows")
        for name, arr in zip(header, columns):
            if arr.shape[0] != n:
                raise ValueError(f"column {name!r} has {arr.shape[0]} rows, expected {n}")
        object.__setattr__(self, "header", header)
        object.__setattr__(self, "columns", tuple(columns))

    @classmethod
    def from_columns(cls, named_columns):
        """Build from ``(name, values)`` pairs (accepts :class:`Series`)."""
        names = []
        columns = []
        for name, values in named_columns:
            names.append(name)
            columns.append(values.values if isinstance(values, Series) else values)
        return cls(header=tuple(names), columns=tuple(columns))

    @property
    def n_rows(self):
        return self.columns[0].shape[0]

    def column(self, name):
        """The raw array behind ``name``; KeyError lists what exists."""
        try:
            index = self.header.index(name)
        except ValueError:
            raise KeyError(
                f"no column {name!r}; table has {', '.join(self.header)}"
            ) from None
        return self.columns[index]

    def series(self, name):
        """Column ``name`` wrapped as a :class:`Series`."""
        return Series(self.column(name))


def write_csv(path, table):
    """Write a :class:`CsvTable`; floats via ``repr`` (lossless, deterministic)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(table.header)
        for row in zip(*table.columns):
            writer.writerow([repr(float(v)) for v in row])


def read_csv(path):
    """Read a file written by :func:`write_csv` (or any numeric CSV) back."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, expected a header row") from None
        width = len(header)
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if len(row) != width:
                raise ValueError(
                    f"{path}:{line_no}: expected {width} fields, got {len(row)}"
                )
            try:
                rows.append([float(tok) for tok in row])
            except ValueError:
                bad = next(tok for tok in row if not _parses(tok))
                raise ValueError(
                    f"{path}:{line_no}: not a number: {bad!r}"
                ) from None
    if not rows:
        raise ValueError(f"{path}: no data rows")
    data = np.array(rows, dtype=np.float64)
    return CsvTable(header=tuple(header), columns=tuple(data.T))


def _parses(token):
    try:
        float(token)
        return True
    except ValueError:
        return False

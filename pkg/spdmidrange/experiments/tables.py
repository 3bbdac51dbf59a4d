"""CSV rendering of experiment tables."""


from __future__ import annotations

from collections.abc import Iterable, Sequence
import csv
from dataclasses import dataclass, field
import io


type Cell = int | float | str


def format_cell(value: Cell) -> str:
    # shortest round-trip representation of floats keeps output byte-stable
    return repr(float(value)) if isinstance(value, float) else str(value)


@dataclass
class CsvTable:
    """Header comment lines, a column header, and rows, rendered as CSV text."""

    columns: Sequence[str]

    # lines emitted before the header, each prefixed with '# '
    comments: list[str] = field(default_factory=list)

    rows: list[Sequence[Cell]] = field(default_factory=list)

    def add(self, *row: Cell):
        assert len(row) == len(self.columns), f'*** ROW {row} DOES NOT MATCH COLUMNS {self.columns} ***'
        self.rows.append(row)

    def extend(self, rows: Iterable[Sequence[Cell]]):
        for row in rows:
            self.add(*row)

    def render(self) -> str:
        buffer = io.StringIO()
        buffer.writelines(f'# {comment}\n' for comment in self.comments)

        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(self.columns)
        writer.writerows([format_cell(cell) for cell in row] for row in self.rows)
        return buffer.getvalue()


def seed_comment(experiment: str, seed: int, **params) -> str:
    details: str = ''.join(f', {name}={value}' for name, value in params.items())
    return f'experiment={experiment}, seed={seed}{details}'

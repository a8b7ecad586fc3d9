"""The printed tables, as data and as aligned text."""
from __future__ import annotations

from . import extremal as ex
from .boustrophedon import boustrophedon_triangle, display_rows, format_triangle
from .tchouka import winning_positions
from .wythoff import wythoff_window

TABLES = ("fig3", "fig4", "fig5", "wythoff", "boustro", "tchouka")
DEFAULT_ROWS = {"fig3": 9, "fig4": 9, "fig5": 6, "wythoff": 8, "boustro": 8, "tchouka": 14}


def two_column(header: tuple, pairs) -> str:
    pairs = [(str(a), str(b)) for a, b in pairs]
    w0 = max(len(header[0]), *(len(a) for a, _ in pairs))
    w1 = max(len(header[1]), *(len(b) for _, b in pairs))
    lines = [f"{header[0].rjust(w0)}    {header[1].rjust(w1)}", "-" * (w0 + 4 + w1)]
    lines += [f"{a.rjust(w0)}    {b.rjust(w1)}" for a, b in pairs]
    return "\n".join(lines)


def wythoff_rows(rows: int, cols: int = 9) -> list[list[int]]:
    """Rows 0..rows-1 as printed: the two pre-line columns, then the full
    first row and a staircase that loses one entry per row (never fewer
    than 4)."""
    w = wythoff_window(rows - 1, cols - 1)
    out = []
    for n in range(rows):
        width = cols if n == 0 else max(cols - 1 - n, 4)
        out.append(list(w.preline[n]) + list(w.rows[n][:width]))
    return out


def format_wythoff(rows: int) -> str:
    data = wythoff_rows(rows)
    width = max(len(str(v)) for r in data for v in r)
    lines = []
    for r in data:
        cells = [str(v).rjust(width) for v in r]
        lines.append(" ".join(cells[:2]) + " | " + " ".join(cells[2:]))
    return "\n".join(lines)


def table_data(name: str, rows: int | None = None):
    """(header, rows) for a table; rows is a list of lists of ints."""
    rows = DEFAULT_ROWS[name] if rows is None else rows
    if rows < 1:
        raise ValueError("rows must be >= 1")
    if name == "fig3":
        return ("n", "coefficient"), [list(p) for p in ex.table_fig3(rows - 1)]
    if name == "fig4":
        return ("n", "coefficient"), [list(p) for p in ex.table_fig4(rows - 1)]
    if name == "fig5":
        return ("n", "coefficient"), [list(p) for p in ex.table_fig5(rows - 1)]
    if name == "wythoff":
        return ("row", "entries"), wythoff_rows(rows)
    if name == "boustro":
        return ("row", "entries"), display_rows(boustrophedon_triangle([1] + [0] * (rows - 1)))
    if name == "tchouka":
        return ("n", "position"), [[n, str(b)] for n, b in enumerate(winning_positions(rows - 1))]
    raise KeyError(name)


def render(name: str, rows: int | None = None) -> str:
    rows = DEFAULT_ROWS[name] if rows is None else rows
    if name == "wythoff":
        return format_wythoff(rows)
    if name == "boustro":
        return format_triangle([1] + [0] * (rows - 1))
    header, data = table_data(name, rows)
    return two_column(header, data)

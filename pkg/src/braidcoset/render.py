"""
ASCII drawing of a braid word, one crossing per row.

Strand k sits in column 2(k-1). A row for s_i blanks strands i and i+1 and
puts ``/`` (positive crossing) or ``\\`` (negative crossing) between them; the
letter is printed at the end of the row. Rows are read top to bottom in the
order the letters are applied.
"""

from __future__ import annotations

from .words import BraidWord, format_word


def render(w: BraidWord, strands: int | None = None) -> str:
    top = max((abs(x) for x in w.letters), default=0)
    n = max(strands or 0, top + 1, 2)
    width = 2 * n - 1
    idle = " ".join("|" * n)
    header = " ".join(str(k % 10) for k in range(1, n + 1))
    lines = [header]
    for x in w.letters:
        i = abs(x)
        row = list(idle)
        row[2 * (i - 1)] = " "
        row[2 * i] = " "
        row[2 * i - 1] = "/" if x > 0 else "\\"
        lines.append("".join(row).ljust(width) + "   " + format_word(BraidWord((x,))))
    lines.append(idle)
    return "\n".join(lines) + "\n"


__all__ = ["render"]

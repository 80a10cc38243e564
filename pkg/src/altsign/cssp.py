"""Column strict shifted plane partitions of a fixed class.

A filling of a shifted Ferrers diagram (strict partition shape, row i
indented i-1 cells) with positive integers, weakly decreasing along rows
and strictly decreasing down columns.  It is of class k when the first
part of every row exceeds the row length by exactly k.  The cell in row i
at position t (1-based) sits in column j = i + t - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import OutOfRangeError
from .exactalg import Gf


class CsspStats(NamedTuple):
    p: int
    q: int
    r: int
    d: int


@dataclass(frozen=True)
class Cssp:
    k: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)


def structure_violation(rows):
    """None if rows form a column strict shifted plane partition (of any
    class, or none), else a message with the first offending cell."""
    shape = [len(r) for r in rows]
    for i in range(len(shape)):
        if shape[i] == 0:
            return f"row {i + 1} is empty"
        if i and shape[i] >= shape[i - 1]:
            return f"shape not strictly decreasing at row {i + 1}"
    for i, row in enumerate(rows, start=1):
        for t, c in enumerate(row, start=1):
            if c < 1:
                return f"row {i}, position {t}: part {c} is not positive"
            if t > 1 and c > row[t - 2]:
                return f"row {i}, position {t}: row increases"
            # the cell above sits in the previous row one position right
            if i > 1 and c >= rows[i - 2][t]:
                return f"row {i}, position {t}: column not strictly decreasing"
    return None


def cssp_class(rows):
    """The unique k such that every first part exceeds its row length by k,
    or None when no such k exists (always 0 for the empty filling)."""
    if not rows:
        return 0
    ks = {row[0] - len(row) for row in rows}
    if len(ks) == 1:
        k = ks.pop()
        return k if k >= 0 else None
    return None


def validate(c: Cssp):
    """None if c is a valid class-k object; distinguishes structural
    violations from class violations."""
    problem = structure_violation(c.rows)
    if problem:
        return f"not a column strict shifted plane partition: {problem}"
    for i, row in enumerate(c.rows, start=1):
        if row[0] - len(row) != c.k:
            return (f"class violation: row {i} first part {row[0]} does not "
                    f"exceed length {len(row)} by {c.k}")
    return None


def enumerate_cssps(k: int, n: int) -> list[Cssp]:
    """All class-k column strict shifted plane partitions whose first row
    has at most n parts, including the empty one.  Rows are filled top to
    bottom with the first part of row i forced to lambda_i + k."""
    if k < 0 or n < 0:
        raise ValueError("need k >= 0 and n >= 0")
    out = [Cssp(k, ())]

    def extend(rows, prev_len):
        # next row is shorter than the previous one
        for length in range(1, prev_len):
            first = length + k
            for row in _fill_row(length, first, rows[-1]):
                new = rows + [row]
                out.append(Cssp(k, tuple(tuple(r) for r in new)))
                extend(new, length)

    for length in range(1, n + 1):
        first = length + k
        for row in _fill_row(length, first, None):
            out.append(Cssp(k, (tuple(row),)))
            extend([row], length)
    return out


def _fill_row(length, first, above):
    """All rows of the given length starting with `first`, weakly decreasing,
    with each later part strictly below `above` shifted one position right
    (above is None for the top row)."""
    row = [first] + [0] * (length - 1)

    def rec(t):
        if t > length:
            yield list(row)
            return
        hi = row[t - 2]
        if above is not None:
            # the cell above position t is position t+1 of the row above
            hi = min(hi, above[t] - 1)
        for v in range(1, hi + 1):
            row[t - 1] = v
            yield from rec(t + 1)

    if above is None or above[1] > first:
        yield from rec(2)


def stats(c: Cssp, d: int) -> CsspStats:
    """(p_d, q, r): p_d counts parts equal to j - i + d (j the column),
    q counts parts equal to 1, r counts rows.  Requires 1 <= d <= k."""
    if not 1 <= d <= c.k:
        raise OutOfRangeError(f"d = {d} not in 1..{c.k}")
    p = q = 0
    for row in c.rows:
        for t, part in enumerate(row, start=1):
            if part == t - 1 + d:  # j - i + d with j = i + t - 1
                p += 1
            if part == 1:
                q += 1
    return CsspStats(p, q, len(c.rows), d)


def weight(c: Cssp, d: int) -> Gf:
    """W_d(C) for 1 <= d <= k, or the d = 0 weight (admissible for every
    class) with its expanded (P+Q-1) factor."""
    if d < 0 or (d > c.k and d != 0):
        raise OutOfRangeError(f"d = {d} not admissible for class {c.k}")
    if d >= 1:
        s = stats(c, d)
        return Gf.monomial(s.p, s.q, s.r)
    p = q = 0
    for row in c.rows:
        for t, part in enumerate(row, start=1):
            if part > 1 and part == t - 1:
                p += 1
            if part == 1 and t >= 3:
                q += 1
    w = Gf.monomial(p, q, len(c.rows))
    bottom = c.rows[-1] if c.rows else ()
    if len(bottom) >= 2 and bottom[1] == 1:
        w = w * Gf.p_plus_q_minus_1()
    return w


def gf(k: int, n: int, d: int) -> Gf:
    """Generating function of class-k objects with first row at most n."""
    total = Gf.zero()
    for c in enumerate_cssps(k, n):
        total += weight(c, d)
    return total


def pretty(c: Cssp) -> str:
    """Indented text layout of the shifted filling."""
    if not c.rows:
        return "(empty)"
    width = max(len(str(p)) for row in c.rows for p in row)
    lines = []
    for i, row in enumerate(c.rows):
        pad = " " * ((width + 1) * i)
        lines.append(pad + " ".join(str(p).rjust(width) for p in row))
    return "\n".join(lines)


def to_json(c: Cssp) -> dict:
    d = {"class": c.k, "rows": [list(r) for r in c.rows]}
    d["stats"] = [
        {"d": dd, "p": w.p, "q": w.q, "r": w.r}
        for dd in range(1, c.k + 1)
        for w in [stats(c, dd)]
    ]
    return d


def from_json(d: dict) -> Cssp:
    c = Cssp(int(d["class"]),
             tuple(tuple(int(x) for x in row) for row in d["rows"]))
    problem = validate(c)
    if problem:
        raise ValueError(problem)
    return c

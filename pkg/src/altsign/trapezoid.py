"""Alternating sign trapezoids: validation, enumeration, statistics and
weights.

An (n,l)-alternating sign trapezoid has n centered rows of lengths
2n+l-2, 2n+l-4, ..., l over entries -1/0/1; row i (1-based, top to bottom)
occupies absolute columns i .. 2n+l-1-i of a width-(2n+l-2) grid.  For
l >= 2 every row sums to 1; l = 1 is the quasi variant where the bottom
row may sum to 0 or 1.  Nonzero entries alternate along rows and columns,
the topmost nonzero entry of every column is 1, and for l >= 2 the middle
l-2 columns sum to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .exactalg import Gf


class AstStats(NamedTuple):
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class Trapezoid:
    n: int
    l: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return 2 * self.n + self.l - 2

    def row_span(self, i: int) -> tuple[int, int]:
        """Absolute column range (inclusive) covered by row i (1-based)."""
        return i, 2 * self.n + self.l - 1 - i

    def entry(self, i: int, c: int) -> int:
        lo, hi = self.row_span(i)
        if not lo <= c <= hi:
            raise IndexError(f"row {i} does not cover column {c}")
        return self.rows[i - 1][c - lo]

    def last_row_covering(self, c: int) -> int:
        return min(c, 2 * self.n + self.l - 1 - c, self.n)

    def column_entries(self, c: int) -> list[int]:
        return [self.entry(i, c) for i in range(1, self.last_row_covering(c) + 1)]

    def column_sum(self, c: int) -> int:
        return sum(self.column_entries(c))

    def column_bottom(self, c: int) -> int:
        return self.entry(self.last_row_covering(c), c)

    def column_label(self, c: int):
        """Signed column label; None for the middle columns (l >= 3).

        For l >= 2 the n leftmost columns carry -n..-1 and the n rightmost
        carry 1..n.  For l = 1 the 2n-1 columns carry -(n-1)..n-1 with the
        central column labeled 0.
        """
        if self.l == 1:
            return c - self.n
        if c <= self.n:
            return c - self.n - 1
        if c >= self.n + self.l - 1:
            return c - (self.n + self.l - 2)
        return None


def validate(t: Trapezoid):
    """None if t is a valid trapezoid, else a message locating the first
    violation.  Columns are scanned before rows (each column top-down:
    topmost-entry rule, then alternation, then the middle-column sum), so a
    flipped topmost 1 is reported against the topmost-entry condition.
    """
    n, l = t.n, t.l
    if n < 1 or l < 1:
        return f"need n >= 1 and l >= 1, got n={n}, l={l}"
    if len(t.rows) != n:
        return f"expected {n} rows, got {len(t.rows)}"
    for i in range(1, n + 1):
        lo, hi = t.row_span(i)
        if len(t.rows[i - 1]) != hi - lo + 1:
            return f"row {i}: expected length {hi - lo + 1}, got {len(t.rows[i - 1])}"
        for c, e in zip(range(lo, hi + 1), t.rows[i - 1]):
            if e not in (-1, 0, 1):
                return f"row {i}, column {c}: entry {e} not in {{-1,0,1}}"
    for c in range(1, t.width + 1):
        prev = 0
        for i in range(1, t.last_row_covering(c) + 1):
            e = t.entry(i, c)
            if e == 0:
                continue
            if prev == 0 and e == -1:
                return f"column {c}: topmost non-zero entry (row {i}) is -1"
            if e == prev:
                return f"column {c}: non-zero entries do not alternate at row {i}"
            prev = e
        if l >= 2 and n + 1 <= c <= n + l - 2 and t.column_sum(c) != 0:
            return f"middle column {c}: sum {t.column_sum(c)} != 0"
    for i in range(1, n + 1):
        prev = 0
        for c, e in zip(range(t.row_span(i)[0], t.row_span(i)[1] + 1), t.rows[i - 1]):
            if e == 0:
                continue
            if e == prev:
                return f"row {i}: non-zero entries do not alternate at column {c}"
            prev = e
        s = sum(t.rows[i - 1])
        if l == 1 and i == n:
            if s not in (0, 1):
                return f"bottom row: sum {s} not in {{0,1}}"
        elif s != 1:
            return f"row {i}: sum {s} != 1"
    return None


def enumerate_trapezoids(n: int, l: int) -> list[Trapezoid]:
    """All (n,l)-alternating sign trapezoids, in row-major lexicographic
    order of the concatenated rows with -1 < 0 < 1.

    Backtracking with a per-column state machine: a column accepts 1 when
    untouched or after a -1, and -1 only after a 1 (this encodes column
    alternation plus the topmost-1 rule).  Middle columns are checked for
    zero sum as soon as no further row covers them.
    """
    if n < 1 or l < 1:
        raise ValueError("need n >= 1 and l >= 1")
    width = 2 * n + l - 2
    col_state = [0] * (width + 1)   # last nonzero seen in the column
    col_sum = [0] * (width + 1)
    rows: list[tuple[int, ...]] = []
    out: list[Trapezoid] = []

    def finish_row(i):
        # columns no longer covered after row i must satisfy their sum rule
        for c in range(1, width + 1):
            if min(c, 2 * n + l - 1 - c, n) == i:
                if l >= 2 and n + 1 <= c <= n + l - 2 and col_sum[c] != 0:
                    return False
        return True

    def fill_row(i):
        lo, hi = i, 2 * n + l - 1 - i
        quasi_bottom = (l == 1 and i == n)
        row: list[int] = []

        def cell(c, row_last, row_sum):
            if c > hi:
                ok = row_sum == 1 or (quasi_bottom and row_sum == 0)
                if ok and finish_row(i):
                    rows.append(tuple(row))
                    if i == n:
                        out.append(Trapezoid(n, l, tuple(rows)))
                    else:
                        fill_row(i + 1)
                    rows.pop()
                return
            remaining = hi - c  # cells after this one
            for e in (-1, 0, 1):
                if e:
                    if e == row_last:
                        continue  # row alternation
                    if e == 1 and col_state[c] == 1:
                        continue  # column alternation
                    if e == -1 and col_state[c] != 1:
                        continue  # topmost nonzero must be 1
                new_sum = row_sum + e
                new_last = e if e else row_last
                # an alternating tail of `remaining` cells changes the sum
                # by at most +1 (if the next nonzero may be +1) and at
                # least -1 (if it may be -1)
                hi_gain = 1 if (new_last != 1 and remaining >= 1) else 0
                lo_gain = -1 if (new_last != -1 and remaining >= 1) else 0
                target_hi = 1
                target_lo = 0 if quasi_bottom else 1
                if new_sum + hi_gain < target_lo or new_sum + lo_gain > target_hi:
                    continue
                if e:
                    saved = col_state[c]
                    col_state[c] = e
                    col_sum[c] += e
                row.append(e)
                cell(c + 1, new_last, new_sum)
                row.pop()
                if e:
                    col_state[c] = saved
                    col_sum[c] -= e

        cell(lo, 0, 0)

    fill_row(1)
    return out


def one_column_positions(t: Trapezoid) -> tuple[int, ...]:
    """Sorted signed labels of the columns with sum 1 (requires l >= 2)."""
    if t.l < 2:
        raise ValueError("1-column positions are defined for l >= 2")
    labels = []
    for c in range(1, t.width + 1):
        if t.column_sum(c) == 1:
            lab = t.column_label(c)
            if lab is None:
                raise ValueError(f"middle column {c} has sum 1")
            labels.append(lab)
    return tuple(sorted(labels))


def stats(t: Trapezoid) -> AstStats:
    """The triple (p, q, r) for l >= 2: r counts 1-columns among the n
    leftmost columns, p/q count 10-columns (1-columns with bottom entry 0)
    among the n leftmost/rightmost columns."""
    if t.l < 2:
        raise ValueError("stats are defined for l >= 2; use weight for l = 1")
    p = q = r = 0
    for c in range(1, t.width + 1):
        if t.column_sum(c) != 1:
            continue
        lab = t.column_label(c)
        if lab is None:
            raise ValueError(f"middle column {c} has sum 1")
        is_10 = t.column_bottom(c) == 0
        if lab < 0:
            r += 1
            if is_10:
                p += 1
        elif is_10:
            q += 1
    return AstStats(p, q, r)


def weight(t: Trapezoid) -> Gf:
    """W(T) as a generating-function value.

    For l >= 2 this is the monomial P^p Q^q R^r.  For l = 1 the central
    column contributes the expanded factor (P+Q-1) when it is a 10-column,
    p and q count 10-columns strictly left/right of the center, and r
    counts 1-columns with label <= 0.
    """
    if t.l >= 2:
        s = stats(t)
        return Gf.monomial(s.p, s.q, s.r)
    p = q = r = 0
    central_10 = False
    for c in range(1, t.width + 1):
        if t.column_sum(c) != 1:
            continue
        lab = t.column_label(c)
        is_10 = t.column_bottom(c) == 0
        if lab <= 0:
            r += 1
        if lab < 0 and is_10:
            p += 1
        elif lab > 0 and is_10:
            q += 1
        elif lab == 0 and is_10:
            central_10 = True
    w = Gf.monomial(p, q, r)
    if central_10:
        w = w * Gf.p_plus_q_minus_1()
    return w


def gf(n: int, l: int) -> Gf:
    """Generating function of all (n,l)-alternating sign trapezoids."""
    total = Gf.zero()
    for t in enumerate_trapezoids(n, l):
        total += weight(t)
    return total


def column_partial_sums(t: Trapezoid) -> tuple[tuple[int, ...], ...]:
    """Replace every entry by the sum of its column down to its row; the
    result is a 0/1 array of the same shape."""
    psums = []
    running = {}
    for i in range(1, t.n + 1):
        lo, hi = t.row_span(i)
        row = []
        for c in range(lo, hi + 1):
            running[c] = running.get(c, 0) + t.entry(i, c)
            row.append(running[c])
        psums.append(tuple(row))
    return tuple(psums)


def to_json(t: Trapezoid) -> dict:
    d = {"n": t.n, "l": t.l, "rows": [list(r) for r in t.rows]}
    if t.l >= 2:
        s = stats(t)
        d["stats"] = {"p": s.p, "q": s.q, "r": s.r}
    return d


def from_json(d: dict) -> Trapezoid:
    t = Trapezoid(int(d["n"]), int(d["l"]),
                  tuple(tuple(int(e) for e in row) for row in d["rows"]))
    problem = validate(t)
    if problem:
        raise ValueError(problem)
    return t

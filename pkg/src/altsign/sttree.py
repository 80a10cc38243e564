"""Monotone triangles with truncated diagonals ((s,t)-trees) and their
correspondence with alternating sign trapezoids.

Cells of a triangle with n rows are (i, j) with 1 <= j <= i <= n, row 1 at
the top.  The j-th NE-diagonal (counted from the left) is the set of cells
with second coordinate j; the k-th SE-diagonal consists of the cells with
i - j = n - k.  An (s,t)-tree shape removes the bottom s_j cells of
NE-diagonal j (j = 1..len(s)) and the bottom t_k cells of SE-diagonal k
(k = n-len(t)+1..n).  An entry is regular when both its SW neighbour
(i+1, j) and SE neighbour (i+1, j+1) are present; regular entries must lie
weakly between those neighbours and two adjacent regular entries in a row
must differ.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidShapeError, NotInImageError
from .trapezoid import Trapezoid, column_partial_sums, one_column_positions
from .trapezoid import validate as validate_trapezoid


@dataclass(frozen=True)
class SttTree:
    n: int
    s: tuple[int, ...]
    t: tuple[int, ...]
    rows: tuple[tuple[int | None, ...], ...]  # row i has i slots, None = deleted

    def value(self, i: int, j: int):
        return self.rows[i - 1][j - 1]


def deleted_cells(n: int, s, t) -> set:
    """Cells removed by the truncation vectors; InvalidShapeError when the
    vectors are inadmissible or the two deletion regions interfere."""
    s, t = tuple(s), tuple(t)
    if len(s) + len(t) > n:
        raise InvalidShapeError("len(s) + len(t) exceeds n")
    if any(x < 0 for x in s) or any(x < 0 for x in t):
        raise InvalidShapeError("truncation lengths must be non-negative")
    if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
        raise InvalidShapeError("s must be weakly decreasing")
    if any(t[i] > t[i + 1] for i in range(len(t) - 1)):
        raise InvalidShapeError("t must be weakly increasing")
    gone = set()
    for j, sj in enumerate(s, start=1):
        if sj > n - j + 1:
            raise InvalidShapeError(f"s_{j} = {sj} exceeds NE-diagonal {j}")
        for d in range(sj):
            gone.add((n - d, j))
    offset = n - len(t)
    for idx, tk in enumerate(t):
        k = offset + idx + 1
        if tk > k:
            raise InvalidShapeError(f"t_{k} = {tk} exceeds SE-diagonal {k}")
        for d in range(tk):
            cell = (n - d, k - d)
            if cell in gone:
                raise InvalidShapeError(
                    f"NE- and SE-truncations interfere at cell {cell}")
            gone.add(cell)
    return gone


def _shape_cells(n, s, t):
    gone = deleted_cells(n, s, t)
    return {(i, j) for i in range(1, n + 1) for j in range(1, i + 1)
            if (i, j) not in gone}


def _prescribed(n, s, t, b, cells):
    """Map cell -> required value for the diagonal bottom entries; None when
    two prescriptions collide with different values (no tree then).  Empty
    (fully deleted) diagonals impose nothing."""
    r = len(t)
    assignment = {}

    def put(cell, value):
        if cell in assignment and assignment[cell] != value:
            return False
        assignment[cell] = value
        return True

    ok = True
    for j in range(1, n - r + 1):  # NE-diagonal j, bottom entry b_j
        column = [i for i in range(j, n + 1) if (i, j) in cells]
        if column:
            ok = ok and put((max(column), j), b[j - 1])
    for k in range(n - r + 1, n + 1):  # SE-diagonal k, bottom entry b_k
        diag = [i for i in range(n - k + 1, n + 1) if (i, i - n + k) in cells]
        if diag:
            i = max(diag)
            ok = ok and put((i, i - n + k), b[k - 1])
    return assignment if ok else None


def enumerate_sttrees(n: int, s, t, b) -> list[SttTree]:
    """All (s,t)-trees of order n whose NE-diagonal bottoms are b_1..b_{n-r}
    and SE-diagonal bottoms are b_{n-r+1}..b_n (r = len(t)).

    Brute force over the free cells.  Every free cell is regular (a cell
    missing a neighbour is the bottom of some prescribed diagonal), so by
    induction along descending rows each free cell is sandwiched between
    entries of the row below, hence between min(b) and max(b); the regular
    inequalities make the search self-pruning.
    """
    s, t = tuple(s), tuple(t)
    b = tuple(b)
    if len(b) != n:
        raise InvalidShapeError(f"need {n} bottom entries, got {len(b)}")
    if any(b[i] > b[i + 1] for i in range(n - 1)):
        raise InvalidShapeError("b must be weakly increasing")
    cells = _shape_cells(n, s, t)
    if not cells:
        return [SttTree(n, s, t, _to_rows(n, cells, {}))]
    prescribed = _prescribed(n, s, t, b, cells)
    if prescribed is None:
        return []
    values = dict(prescribed)
    out = []
    # fill bottom-up, left to right; free cells take values between their
    # SW and SE neighbours
    free_by_row = {i: [j for j in range(1, i + 1)
                       if (i, j) in cells and (i, j) not in prescribed]
                   for i in range(1, n + 1)}

    def regular(i, j):
        return (i + 1, j) in cells and (i + 1, j + 1) in cells

    def fill_row(i):
        if i == 0:
            out.append(SttTree(n, s, t, _to_rows(n, cells, values)))
            return
        todo = free_by_row[i]

        def fill_cell(idx):
            if idx == len(todo):
                fill_row(i - 1)
                return
            j = todo[idx]
            lo, hi = values[(i + 1, j)], values[(i + 1, j + 1)]
            for v in range(lo, hi + 1):
                if (j - 1 in todo or (i, j - 1) in prescribed) and \
                        regular(i, j - 1) and regular(i, j) and \
                        values.get((i, j - 1)) == v:
                    continue  # adjacent regular entries must differ
                values[(i, j)] = v
                fill_cell(idx + 1)
                del values[(i, j)]

        # sanity: free cells must be regular, otherwise the search space
        # would be unbounded (cannot happen for admissible shapes)
        for j in todo:
            if not regular(i, j):
                raise InvalidShapeError(
                    f"free cell ({i},{j}) lacks a neighbour")
        fill_cell(0)

    fill_row(n)
    return out


def _to_rows(n, cells, values):
    return tuple(
        tuple(values.get((i, j)) if (i, j) in cells else None
              for j in range(1, i + 1))
        for i in range(1, n + 1))


def validate(tree: SttTree):
    """None when the filling satisfies the shape and monotonicity rules."""
    try:
        cells = _shape_cells(tree.n, tree.s, tree.t)
    except InvalidShapeError as e:
        return str(e)
    if len(tree.rows) != tree.n:
        return f"expected {tree.n} rows, got {len(tree.rows)}"
    for i in range(1, tree.n + 1):
        if len(tree.rows[i - 1]) != i:
            return f"row {i}: expected {i} slots"
        for j in range(1, i + 1):
            v = tree.value(i, j)
            if ((i, j) in cells) != (v is not None):
                return f"cell ({i},{j}) presence does not match the shape"

    def regular(i, j):
        return (i + 1, j) in cells and (i + 1, j + 1) in cells

    for (i, j) in cells:
        if regular(i, j):
            v = tree.value(i, j)
            if not tree.value(i + 1, j) <= v <= tree.value(i + 1, j + 1):
                return f"cell ({i},{j}) violates the sandwich inequality"
            if (i, j + 1) in cells and regular(i, j + 1) \
                    and tree.value(i, j + 1) == v:
                return f"cells ({i},{j}) and ({i},{j + 1}) are equal"
    return None


def is_monotone_triangle(rows) -> bool:
    """Full-triangle check: weak increase to the SE and NE, rows strictly
    increasing except possibly the bottom row."""
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != i + 1:
            return False
    for i in range(n - 1):
        for j in range(i + 1):
            if not rows[i + 1][j] <= rows[i][j] <= rows[i + 1][j + 1]:
                return False
        for j in range(i):
            if rows[i][j] >= rows[i][j + 1]:
                return False
    return True


def diagonal_bottoms(tree: SttTree) -> tuple[int, ...]:
    """The vector b recovered from a tree (bottom entries of the n-r
    NE-diagonals followed by those of the r last SE-diagonals)."""
    n, r = tree.n, len(tree.t)
    cells = _shape_cells(n, tree.s, tree.t)
    b = []
    for j in range(1, n - r + 1):
        column = [i for i in range(j, n + 1) if (i, j) in cells]
        b.append(tree.value(max(column), j) if column else None)
    for k in range(n - r + 1, n + 1):
        diag = [i for i in range(n - k + 1, n + 1) if (i, i - n + k) in cells]
        b.append(tree.value(max(diag), diag[-1] - n + k) if diag else None)
    return tuple(b)


def ast_to_sttree(trap: Trapezoid) -> SttTree:
    """Column partial sums recorded row by row as the positions of the 1's,
    columns relabeled -n .. n+l-3; yields an (s,t)-tree with
    s_i = -j_i - 1 and t_i = j_i - 1 for the 1-column positions j."""
    if trap.l < 2:
        raise ValueError("the correspondence is defined for l >= 2")
    n = trap.n
    j = one_column_positions(trap)
    m = sum(1 for x in j if x < 0)
    s = tuple(-x - 1 for x in j[:m])
    t = tuple(x - 1 for x in j[m:])
    psums = column_partial_sums(trap)
    cells = _shape_cells(n, s, t)
    values = {}
    for i in range(1, n + 1):
        lo, _ = trap.row_span(i)
        labels = [lo + offset - n - 1
                  for offset, e in enumerate(psums[i - 1]) if e == 1]
        slots = sorted(jj for (ii, jj) in cells if ii == i)
        if len(slots) != len(labels):
            raise ValueError(
                f"row {i}: {len(labels)} ones but {len(slots)} tree cells")
        for jj, lab in zip(slots, labels):
            values[(i, jj)] = lab
    return SttTree(n, s, t, _to_rows(n, cells, values))


def sttree_to_ast(tree: SttTree, n: int, l: int) -> Trapezoid:
    """Inverse of ast_to_sttree; NotInImageError when no (n,l)-trapezoid
    maps to the given tree."""
    if tree.n != n:
        raise NotInImageError(f"tree order {tree.n} does not match n={n}")
    m = len(tree.s)
    if m + len(tree.t) != n:
        raise NotInImageError("tree truncations do not split into n diagonals")
    width = 2 * n + l - 2
    prev = [0] * (width + 2)
    rows = []
    for i in range(1, n + 1):
        lo, hi = i, 2 * n + l - 1 - i
        marked = set()
        for v in tree.rows[i - 1]:
            if v is None:
                continue
            c = v + n + 1
            if not lo <= c <= hi:
                raise NotInImageError(
                    f"row {i}: entry {v} falls outside the trapezoid")
            if c in marked:
                raise NotInImageError(f"row {i}: duplicate column for {v}")
            marked.add(c)
        cur = [1 if c in marked else 0 for c in range(lo, hi + 1)]
        rows.append(tuple(cur[c - lo] - prev[c] for c in range(lo, hi + 1)))
        for c in range(lo, hi + 1):
            prev[c] = cur[c - lo]
    trap = Trapezoid(n, l, tuple(rows))
    problem = validate_trapezoid(trap)
    if problem:
        raise NotInImageError(problem)
    if ast_to_sttree(trap) != tree:
        raise NotInImageError("tree is not the image of its own preimage")
    return trap


def to_json(tree: SttTree) -> dict:
    return {"n": tree.n, "s": list(tree.s), "t": list(tree.t),
            "rows": [list(r) for r in tree.rows]}


def from_json(d: dict) -> SttTree:
    tree = SttTree(int(d["n"]), tuple(int(x) for x in d["s"]),
                   tuple(int(x) for x in d["t"]),
                   tuple(tuple(None if x is None else int(x) for x in row)
                         for row in d["rows"]))
    problem = validate(tree)
    if problem:
        raise ValueError(problem)
    return tree

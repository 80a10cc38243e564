"""The binomial determinant route.

The generating function of (n,l)-alternating sign trapezoids (equivalently
of class-(l-1) column strict shifted plane partitions with at most n parts
in the first row) equals the n x n determinant with entries

    R * sum_{k=0}^{i} Q^{i-k} (C(k+j+l-3, k) + P C(k+j+l-3, k-1)) + [i = j]

for 0 <= i, j <= n-1.  It is reached from the coefficient matrix of the
power series F(X,Y) = R (1+X-PX)/(1+X+Y) + (1+X)^{l-2} (1+QX)/(1-XY) by
determinant-preserving transformations, which this module verifies
numerically: the closed coefficient formula is compared against a direct
series expansion, and the two matrices are checked to have equal
determinants.

The constant-term form det(F(X_i,Y_j)) / prod (X_j-X_i)(Y_j-Y_i) is not
evaluated directly (it would need multivariate series division); it is
covered transitively by the agreement of this route with the operator
route.
"""

from __future__ import annotations

from .exactalg import Gf, binomial, det_fraction_free


def det_matrix(n: int, l: int) -> list[list[Gf]]:
    """The n x n matrix behind the final determinant."""
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = Gf.zero()
            for k in range(i + 1):
                c = binomial(k + j + l - 3, k)
                cp = binomial(k + j + l - 3, k - 1)
                entry += Gf.monomial(q=i - k, r=1, coeff=c)
                if cp:
                    entry += Gf.monomial(p=1, q=i - k, r=1, coeff=cp)
            if i == j:
                entry += Gf.one()
            row.append(entry)
        out.append(row)
    return out


def gf_det(n: int, l: int) -> Gf:
    """Generating function by the determinant route (derived for l >= 2;
    l = 1 is allowed experimentally but carries no guarantee)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Gf.one()
    d = det_fraction_free(det_matrix(n, l))
    return d


def count(n: int, l: int) -> int:
    """Number of (n,l)-trapezoids via the P=Q=R=1 matrix entries
    C(i+j+l-1, i) + [i = j]."""
    if n == 0:
        return 1
    m = [[binomial(i + j + l - 1, i) + (1 if i == j else 0)
          for j in range(n)] for i in range(n)]
    return det_fraction_free(m)


def behrend_coeff(i: int, j: int, l: int) -> Gf:
    """[X^i Y^j] F(X,Y) in closed form:
    R (-1)^j (C(-j,i) - P C(-j-1,i-1)) + C(l-2,i-j) + Q C(l-2,i-j-1)."""
    sign = -1 if j % 2 else 1
    out = Gf.monomial(r=1, coeff=sign * binomial(-j, i))
    cp = binomial(-j - 1, i - 1)
    if cp:
        out += Gf.monomial(p=1, r=1, coeff=-sign * cp)
    c = binomial(l - 2, i - j)
    if c:
        out += Gf.monomial(coeff=c)
    cq = binomial(l - 2, i - j - 1)
    if cq:
        out += Gf.monomial(q=1, coeff=cq)
    return out


def coeff_matrix(n: int, l: int) -> list[list[Gf]]:
    return [[behrend_coeff(i, j, l) for j in range(n)] for i in range(n)]


def series_coeffs(l: int, max_i: int, max_j: int) -> dict:
    """[X^i Y^j] F(X,Y) for i <= max_i, j <= max_j by direct truncated
    expansion of the two geometric factors (the independent oracle for
    behrend_coeff).  Requires l >= 2."""
    if l < 2:
        raise ValueError("the series expansion is defined for l >= 2")
    bound = max_i + max_j

    def add(dst, key, value):
        v = dst.get(key, Gf.zero()) + value
        if v:
            dst[key] = v
        else:
            dst.pop(key, None)

    # 1/(1+X+Y) = sum_m (-(X+Y))^m; [X^a Y^b] = (-1)^(a+b) C(a+b, a)
    inv1 = {}
    for a in range(max_i + 1):
        for b in range(max_j + 1):
            sign = -1 if (a + b) % 2 else 1
            add(inv1, (a, b), Gf.monomial(coeff=sign * binomial(a + b, a)))
    # R (1 + X - P X) / (1 + X + Y)
    part1 = {}
    R = Gf.monomial(r=1)
    PR = Gf.monomial(p=1, r=1)
    for (a, b), c in inv1.items():
        add(part1, (a, b), R * c)
        add(part1, (a + 1, b), (R - PR) * c)
    # (1+X)^(l-2) (1+QX) / (1-XY);  1/(1-XY) = sum_k X^k Y^k
    part2 = {}
    for k in range(min(max_i, max_j) + 1):
        for a in range(max_i - k + 1):
            c = binomial(l - 2, a)
            cq = binomial(l - 2, a - 1)
            coeff = Gf.monomial(coeff=c) + Gf.monomial(q=1, coeff=cq)
            add(part2, (a + k, k), coeff)
    out = {}
    for (a, b) in set(part1) | set(part2):
        if a <= max_i and b <= max_j:
            v = part1.get((a, b), Gf.zero()) + part2.get((a, b), Gf.zero())
            out[(a, b)] = v
    return out


def verify_coeff_route(n: int, l: int, order: int = 6) -> bool:
    """Two independent checks of the coefficient-matrix step: the closed
    coefficient formula against the direct series expansion up to the given
    order, and det(coefficient matrix) = det(final matrix)."""
    series = series_coeffs(l, order, order)
    for i in range(order + 1):
        for j in range(order + 1):
            if series.get((i, j), Gf.zero()) != behrend_coeff(i, j, l):
                return False
    return det_fraction_free(coeff_matrix(n, l)) == gf_det(n, l)


def k_matrix(n: int) -> list[list[Gf]]:
    """K(n) = (delta_{ij} - Q delta_{i,j+1})."""
    return [[Gf.one() if i == j else
             (Gf.monomial(q=1, coeff=-1) if i == j + 1 else Gf.zero())
             for j in range(n)] for i in range(n)]


def k_matrix_inverse(n: int) -> list[list[Gf]]:
    """K(n)^{-1} = (Q^{i-j} for i >= j, else 0)."""
    return [[Gf.monomial(q=i - j) if i >= j else Gf.zero()
             for j in range(n)] for i in range(n)]

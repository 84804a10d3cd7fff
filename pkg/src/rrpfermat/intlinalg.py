"""Exact integer linear algebra: fraction-free determinants and row-lattice
indices.  Matrices here stay small (at most ~80x80), so the classical cubic
algorithms are plenty; exactness is the only requirement."""

from __future__ import annotations


def bareiss_det(rows) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination.

    All intermediate divisions are exact, so the result is the exact
    determinant over Z regardless of entry size.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    for r in a:
        if len(r) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def row_lattice_index(rows, dim: int) -> int:
    """|Z^dim / L| for the lattice L spanned by the given integer rows.

    Returns 0 when the rows do not span a finite-index sublattice (rank
    deficient).  Triangularizes by integer row operations (Euclid within
    each column); the index is the product of the pivots.
    """
    mat = [list(r) for r in rows if any(r)]
    top = 0
    index = 1
    for col in range(dim):
        while True:
            nz = [i for i in range(top, len(mat)) if mat[i][col]]
            if not nz:
                return 0
            if len(nz) == 1:
                piv = nz[0]
                break
            nz.sort(key=lambda i: abs(mat[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = mat[i][col] // mat[base][col]
                if q:
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[base])]
        mat[top], mat[piv] = mat[piv], mat[top]
        index *= abs(mat[top][col])
        top += 1
    return index

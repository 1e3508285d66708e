# -*- coding:utf-8 -*-

"""
Exact linear algebra over the coefficient field.

Matrices are plain lists of rows holding elements of a sympy domain; elimination is delegated to
`DomainMatrix`, whose reduced row echelon form is unique, so pivots and kernel bases only depend on
the column order chosen by the caller.

Author: dgtransfer developers
Date:   2024/03/04
"""

from sympy.polys.matrices import DomainMatrix


def _matrix(rows, ncols, K):
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), K)


def rref(rows, ncols, K):
    """ Reduced row echelon form.

    Args:
        rows: list of rows, each of length `ncols`.
        ncols: number of columns (needed when `rows` is empty).
        K: sympy field domain.

    Returns:
        (nonzero rows of the rref, pivot column indices)
    """
    if not rows or not ncols:
        return [], ()
    R, pivots = _matrix(rows, ncols, K).rref()
    pivots = tuple(pivots)
    return R.to_list()[:len(pivots)], pivots


def rank(rows, ncols, K):
    if not rows or not ncols:
        return 0
    return _matrix(rows, ncols, K).rank()


def kernel_basis(rows, ncols, K):
    """ Basis of {v : Mv = 0}, one vector per free column f: v_f = e_f - sum_r R[r][f] e_{pivot(r)}.

    Returns:
        (vectors, free column indices); the coordinate of a kernel vector along v_f is its entry at f.
    """
    R, pivots = rref(rows, ncols, K)
    pivot_set = set(pivots)
    free = [f for f in range(ncols) if f not in pivot_set]
    vectors = []
    for f in free:
        v = [K.zero] * ncols
        v[f] = K.one
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][f]
        vectors.append(v)
    return vectors, free


def image_basis(rows, ncols, K):
    """ The pivot columns of M, a basis of its column space. """
    _, pivots = rref(rows, ncols, K)
    return [[row[c] for row in rows] for c in pivots]


def in_span(columns, v, K):
    """ True iff v is a K-combination of `columns` (vectors of equal length). """
    if not any(v):
        return True
    if not columns:
        return False
    m = len(v)
    rows = [[col[k] for col in columns] for k in range(m)]
    augmented = [rows[k] + [v[k]] for k in range(m)]
    return rank(rows, len(columns), K) == rank(augmented, len(columns) + 1, K)


def matmul(A, B, ncols_b, K):
    """ A*B for list-of-rows matrices; returns list of rows. """
    if not A or not B:
        return [[K.zero] * ncols_b for _ in A]
    return (_matrix(A, len(B), K) * _matrix(B, ncols_b, K)).to_list()

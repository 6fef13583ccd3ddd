"""Independent brute-force oracles shared by the test modules.

These never call the code paths they are used to check.
"""

import itertools

import numpy as np


def lp_by_vertex_enumeration(objective, eq=(), ineq=(), lower_bounds=None, tol=1e-9):
    """Maximize objective @ x over the polyhedron by enumerating candidate
    vertices (all n-subsets of tight constraints). Returns (optimum, x) or
    None if no feasible vertex exists. Assumes a bounded, full-dimensional
    feasible region so the optimum is attained at a vertex.
    """
    objective = np.asarray(objective, dtype=float)
    n = objective.shape[0]
    rows, rhs, is_eq = [], [], []
    for r, b in eq:
        rows.append(np.asarray(r, dtype=float))
        rhs.append(b)
        is_eq.append(True)
    for r, b in ineq:
        rows.append(np.asarray(r, dtype=float))
        rhs.append(b)
        is_eq.append(False)
    lb = lower_bounds if lower_bounds is not None else [0.0] * n
    for j, l in enumerate(lb):
        if l is not None:
            row = np.zeros(n)
            row[j] = -1.0
            rows.append(row)
            rhs.append(-l)
            is_eq.append(False)
    rows = np.array(rows)
    rhs = np.array(rhs)
    eq_idx = [i for i, e in enumerate(is_eq) if e]

    best = None
    for subset in itertools.combinations(range(len(rows)), n):
        if any(i not in subset for i in eq_idx):
            continue
        A = rows[list(subset)]
        if abs(np.linalg.det(A)) < 1e-12:
            continue
        x = np.linalg.solve(A, rhs[list(subset)])
        viol_eq = max((abs(rows[i] @ x - rhs[i]) for i in eq_idx), default=0.0)
        viol_in = max(
            (rows[i] @ x - rhs[i] for i in range(len(rows)) if i not in eq_idx),
            default=0.0,
        )
        if viol_eq <= tol and viol_in <= tol:
            val = float(objective @ x)
            if best is None or val > best[0]:
                best = (val, x)
    return best


def char_poly_eigs_3x3(M):
    """Eigenvalues of a symmetric matrix of side <= 3 via numpy.roots on the
    characteristic polynomial."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    if n == 1:
        return np.array([M[0, 0]])
    if n == 2:
        tr, det = M[0, 0] + M[1, 1], np.linalg.det(M)
        coeffs = [1.0, -tr, det]
    else:
        tr = np.trace(M)
        c2 = 0.5 * (tr**2 - np.trace(M @ M))
        coeffs = [1.0, -tr, c2, -np.linalg.det(M)]
    roots = np.roots(coeffs)
    return np.sort(roots.real)[::-1]

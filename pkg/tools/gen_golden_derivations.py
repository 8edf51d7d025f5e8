#!/usr/bin/env python3
"""Generate the golden derivation basis for the Heisenberg algebra n3.

Standalone on purpose: this script sets up and solves the derivation
equations with its own Fraction-based row reduction, without importing
the package, so the committed JSON is an independent cross-check of
derivation_algebra.

Usage: python3 tools/gen_golden_derivations.py > tests/golden/derivations_n3.json
"""

import json
from fractions import Fraction

DIM = 3
# [e1, e2] = e3, all other brackets zero (0-based slots, i < j)
BRACKETS = {(0, 1): {2: Fraction(1)}}


def bracket(i, j):
    """Structure constants c with [e_i, e_j] = sum_t c[t] e_t."""
    out = [Fraction(0)] * DIM
    if (i, j) in BRACKETS:
        for t, c in BRACKETS[(i, j)].items():
            out[t] = c
    elif (j, i) in BRACKETS:
        for t, c in BRACKETS[(j, i)].items():
            out[t] = -c
    return out


def derivation_rows():
    """One row per (pair, output component) of D[x,y] = [Dx,y] + [x,Dy].

    Unknowns are the 9 matrix entries d[r][c] (column c is the image of
    e_c), flattened as r * DIM + c.
    """
    rows = []
    for i in range(DIM):
        for j in range(i + 1, DIM):
            cij = bracket(i, j)
            for t in range(DIM):
                row = [Fraction(0)] * (DIM * DIM)
                # D([e_i, e_j]) component t: sum_s c_ij^s d[t][s]
                for s in range(DIM):
                    row[t * DIM + s] += cij[s]
                # minus [D e_i, e_j]_t = sum_r d[r][i] [e_r, e_j]_t
                for r in range(DIM):
                    row[r * DIM + i] -= bracket(r, j)[t]
                # minus [e_i, D e_j]_t = sum_r d[r][j] [e_i, e_r]_t
                for r in range(DIM):
                    row[r * DIM + j] -= bracket(i, r)[t]
                if any(row):
                    rows.append(row)
    return rows


def nullspace(rows, ncols):
    """Basis of the solution space, free variables set to unit values."""
    mat = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        hit = next((r for r in range(rank, len(mat)) if mat[r][col] != 0),
                   None)
        if hit is None:
            continue
        mat[rank], mat[hit] = mat[hit], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -mat[prow][fc]
        basis.append(vec)
    return basis


def main():
    rows = derivation_rows()
    basis = nullspace(rows, DIM * DIM)
    doc = {
        "algebra": "n3",
        "dim": DIM,
        "convention": "columns are images; entry [r][c] is the e_r "
                      "coefficient of D(e_c); matrices flattened row-major",
        "equation_rows": len(rows),
        "basis": [[str(v) for v in vec] for vec in basis],
    }
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()

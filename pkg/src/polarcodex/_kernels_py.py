"""Pure-Python rank kernels.

Same interface as the compiled module `_kernels_cy`; used as the fallback
backend. Matrices are small but the functions sit in the innermost loop of
every Betti computation, so the GF(2) path packs rows into Python ints.
"""

from __future__ import annotations

BACKEND = "python"


def rank_gf2_rows(rows, ncols):
    """Rank over GF(2) of rows given as int bitsets (bit j = column j)."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            piv = pivots.get(top)
            if piv is None:
                pivots[top] = row
                rank += 1
                break
            row ^= piv
    return rank


def rank_gfp(rows, p):
    """Rank mod p of a dense matrix given as a list of row lists."""
    work = [[a % p for a in row] for row in rows]
    if not work or not work[0]:
        return 0
    nrows, ncols = len(work), len(work[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = pow(work[rank][col], p - 2, p)
        prow = work[rank]
        for r in range(nrows):
            if r != rank and work[r][col]:
                factor = (work[r][col] * inv) % p
                row = work[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - factor * prow[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def chain_ranks(faces_by_dim, p):
    """Ranks of the boundary maps of a chain complex of subset masks.

    faces_by_dim[d] lists the masks of the degree-d basis elements, sorted
    ascending. Returns [rank(d_1), ..., rank(d_D)] where d_k maps degree k
    to degree k-1. A boundary term whose mask is absent from the lower
    degree is dropped (this happens for Taylor strands; genuine simplicial
    complexes are downward closed, so nothing is dropped there).
    """
    ranks = []
    for d in range(1, len(faces_by_dim)):
        parents = faces_by_dim[d]
        children = faces_by_dim[d - 1]
        if not parents or not children:
            ranks.append(0)
            continue
        index = {mask: i for i, mask in enumerate(children)}
        if p == 2:
            rows = []
            for face in parents:
                row = 0
                rest = face
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    j = index.get(face ^ bit)
                    if j is not None:
                        row |= 1 << j
                rows.append(row)
            ranks.append(rank_gf2_rows(rows, len(children)))
        else:
            rows = []
            for face in parents:
                row = [0] * len(children)
                rest = face
                k = 0
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    j = index.get(face ^ bit)
                    if j is not None:
                        row[j] = (row[j] + (-1 if k & 1 else 1)) % p
                    k += 1
                rows.append(row)
            ranks.append(rank_gfp(rows, p))
    return ranks

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled rank kernels; interface mirror of `_kernels_py`."""

import numpy as np

BACKEND = "cython"


cdef int _rank_packed(unsigned long long[:, ::1] M, int nrows, int nwords, int ncols):
    cdef int rank = 0, i, w, piv, col, cw
    cdef unsigned long long cb, tmp
    for col in range(ncols):
        cw = col >> 6
        cb = (<unsigned long long> 1) << (col & 63)
        piv = -1
        for i in range(rank, nrows):
            if M[i, cw] & cb:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for w in range(nwords):
                tmp = M[rank, w]
                M[rank, w] = M[piv, w]
                M[piv, w] = tmp
        for i in range(nrows):
            if i != rank and (M[i, cw] & cb):
                for w in range(nwords):
                    M[i, w] ^= M[rank, w]
        rank += 1
        if rank == nrows:
            break
    return rank


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef int _rank_modp(long long[:, ::1] M, int nrows, int ncols, long long p):
    cdef int rank = 0, i, c, piv, col
    cdef long long inv, factor, tmp
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if M[i, col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(ncols):
                tmp = M[rank, c]
                M[rank, c] = M[piv, c]
                M[piv, c] = tmp
        inv = _inv_mod(M[rank, col], p)
        for i in range(nrows):
            if i != rank and M[i, col]:
                factor = (M[i, col] * inv) % p
                for c in range(col, ncols):
                    M[i, c] = (M[i, c] - factor * M[rank, c]) % p
                    if M[i, c] < 0:
                        M[i, c] += p
        rank += 1
        if rank == nrows:
            break
    return rank


cdef int _bisect(long long[::1] arr, int n, long long value):
    cdef int lo = 0, hi = n - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if arr[mid] == value:
            return mid
        if arr[mid] < value:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


def rank_gf2_rows(rows, ncols):
    """Rank over GF(2) of rows given as int bitsets (bit j = column j)."""
    cdef int nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef int nwords = (ncols + 63) >> 6
    packed = np.zeros((nrows, nwords), dtype=np.uint64)
    cdef unsigned long long[:, ::1] M = packed
    cdef int i, w
    cdef object r
    for i in range(nrows):
        r = rows[i]
        w = 0
        while r:
            M[i, w] = r & 0xFFFFFFFFFFFFFFFF
            r >>= 64
            w += 1
    return _rank_packed(M, nrows, nwords, ncols)


def rank_gfp(rows, p):
    """Rank mod p of a dense matrix given as a list of row lists."""
    if not rows or not rows[0]:
        return 0
    mat = np.asarray(rows, dtype=np.int64) % p
    mat = np.ascontiguousarray(mat)
    cdef long long[:, ::1] M = mat
    return _rank_modp(M, mat.shape[0], mat.shape[1], p)


def chain_ranks(faces_by_dim, p):
    """Ranks of the boundary maps of a chain complex of subset masks.

    Same contract as the pure-Python twin: faces_by_dim[d] sorted ascending,
    boundary terms absent from the lower degree are dropped.
    """
    cdef long long pp = p
    cdef int d, i, j, k, nparents, nchildren, nwords
    cdef long long face, rest, bit
    ranks = []
    for d in range(1, len(faces_by_dim)):
        par = np.asarray(faces_by_dim[d], dtype=np.int64)
        chi = np.asarray(faces_by_dim[d - 1], dtype=np.int64)
        nparents = par.shape[0]
        nchildren = chi.shape[0]
        if nparents == 0 or nchildren == 0:
            ranks.append(0)
            continue
        parents = np.ascontiguousarray(par)
        children = np.ascontiguousarray(chi)
        if pp == 2:
            ranks.append(_boundary_rank_gf2(parents, children, nparents, nchildren))
        else:
            ranks.append(_boundary_rank_gfp(parents, children, nparents, nchildren, pp))
    return ranks


cdef int _boundary_rank_gf2(long long[::1] parents, long long[::1] children,
                            int nparents, int nchildren):
    cdef int nwords = (nchildren + 63) >> 6
    packed = np.zeros((nparents, nwords), dtype=np.uint64)
    cdef unsigned long long[:, ::1] M = packed
    cdef int i, j
    cdef long long face, rest, bit
    for i in range(nparents):
        face = parents[i]
        rest = face
        while rest:
            bit = rest & (-rest)
            rest ^= bit
            j = _bisect(children, nchildren, face ^ bit)
            if j >= 0:
                M[i, j >> 6] ^= (<unsigned long long> 1) << (j & 63)
    return _rank_packed(M, nparents, nwords, nchildren)


cdef int _boundary_rank_gfp(long long[::1] parents, long long[::1] children,
                            int nparents, int nchildren, long long p):
    dense = np.zeros((nparents, nchildren), dtype=np.int64)
    cdef long long[:, ::1] M = dense
    cdef int i, j, k
    cdef long long face, rest, bit, val
    for i in range(nparents):
        face = parents[i]
        rest = face
        k = 0
        while rest:
            bit = rest & (-rest)
            rest ^= bit
            j = _bisect(children, nchildren, face ^ bit)
            if j >= 0:
                val = -1 if (k & 1) else 1
                M[i, j] = (M[i, j] + val) % p
                if M[i, j] < 0:
                    M[i, j] += p
            k += 1
    return _rank_modp(M, nparents, nchildren, p)

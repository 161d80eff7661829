"""Bit-packed GF(2) linear algebra on uint64 words.

Rows are stored as arrays of 64-bit words, least-significant bit first, so a
matrix with n columns uses ceil(n/64) words per row.  Everything here is
plain elimination; no structure is exploited.
"""

import numpy as np

WORD = 64


def pack_rows(rows, n_cols):
    """Pack an iterable of column-index lists into a (n_rows, n_words) uint64 array."""
    n_words = (n_cols + WORD - 1) // WORD
    out = np.zeros((len(rows), n_words), dtype=np.uint64)
    for i, support in enumerate(rows):
        for c in support:
            out[i, c // WORD] |= np.uint64(1) << np.uint64(c % WORD)
    return out


def unpack_row(row_words, n_cols):
    """Column indices of the set bits in one packed row."""
    bits = np.unpackbits(row_words.view(np.uint8), bitorder="little")
    return np.flatnonzero(bits[:n_cols])


def get_bit(packed, i, c):
    return int((packed[i, c // WORD] >> np.uint64(c % WORD)) & np.uint64(1))


def eliminate(packed, n_cols, col_order=None):
    """Gauss-Jordan elimination over GF(2), in place on a copy.

    Returns (rref, pivot_cols, row_perm_applied) where rref is fully reduced
    (each pivot column has a single 1).  Pivots are chosen scanning columns
    in col_order (default 0..n_cols-1) and rows top-down.
    """
    a = packed.copy()
    n_rows = a.shape[0]
    if col_order is None:
        col_order = range(n_cols)
    pivot_cols = []
    r = 0
    for c in col_order:
        if r >= n_rows:
            break
        w, b = c // WORD, np.uint64(1) << np.uint64(c % WORD)
        col = (a[r:, w] & b) != 0
        hits = np.flatnonzero(col)
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        # clear c in every other row that has it
        mask = (a[:, w] & b) != 0
        mask[r] = False
        a[mask] ^= a[r]
        pivot_cols.append(c)
        r += 1
    return a, pivot_cols


def rank(packed, n_cols, cols=None):
    """GF(2) rank of the packed matrix, optionally restricted to a column subset."""
    if cols is not None:
        sub = extract_columns(packed, cols)
        return len(eliminate(sub, len(cols))[1])
    return len(eliminate(packed, n_cols)[1])


def extract_columns(packed, cols):
    """New packed matrix containing only the given columns, in the given order."""
    n_rows = packed.shape[0]
    dense = np.zeros((n_rows, len(cols)), dtype=np.uint8)
    for j, c in enumerate(cols):
        w, s = c // WORD, np.uint64(c % WORD)
        dense[:, j] = (packed[:, w] >> s).astype(np.uint64) & np.uint64(1)
    return pack_dense(dense)


def pack_dense(dense):
    """Pack a (n_rows, n_cols) 0/1 array into uint64 words."""
    n_rows, n_cols = dense.shape
    n_words = (n_cols + WORD - 1) // WORD
    padded = np.zeros((n_rows, n_words * WORD), dtype=np.uint8)
    padded[:, :n_cols] = dense & 1
    return np.packbits(padded, axis=1, bitorder="little").view(np.uint64).reshape(n_rows, n_words)


def matvec(packed, x_packed):
    """y = A x over GF(2); x_packed is one packed row, returns uint8 vector of length n_rows."""
    return (np.bitwise_count(packed & x_packed).sum(axis=1) & 1).astype(np.uint8)


def matmat_dense(packed, dense_cols):
    """A (packed, m x n) times a dense (n, k) 0/1 matrix -> dense (m, k) 0/1."""
    xt = pack_dense(dense_cols.T.astype(np.uint8))
    m = packed.shape[0]
    k = xt.shape[0]
    out = np.empty((m, k), dtype=np.uint8)
    for j in range(k):
        out[:, j] = matvec(packed, xt[j])
    return out

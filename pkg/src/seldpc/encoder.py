"""Systematic encoding by one-time Gaussian elimination with column pivoting.

One encoder covers any full-row-rank matrix, original or split-extended; no
QC structure is exploited.  The reduction is done once per matrix and cached
on the encoder object.
"""

import numpy as np

from . import gf2
from .errors import RankDeficient


class SystematicEncoder:
    """Caches the reduced parity checks of `h` and encodes info words against it.

    Attributes
    ----------
    systematic_cols : columns carrying the information bits (the non-pivots
        of the one-time elimination); info bits are recoverable from a
        codeword at these positions.
    parity_cols : pivot columns, one per row.
    """

    def __init__(self, h):
        self.h = h
        rref, pivots = gf2.eliminate(h.packed, h.n_cols)
        if len(pivots) < h.n_rows:
            raise RankDeficient(len(pivots), h.n_rows)
        self.parity_cols = np.array(pivots, dtype=np.int64)
        mask = np.ones(h.n_cols, dtype=bool)
        mask[self.parity_cols] = False
        self.systematic_cols = np.flatnonzero(mask)
        self.k = len(self.systematic_cols)
        # row i of rref reads: x[parity_cols[i]] = sum of x over its
        # systematic support; keep that block densely for fast batch encodes.
        dense = np.zeros((h.n_rows, self.k), dtype=np.uint8)
        for j, c in enumerate(self.systematic_cols):
            w, s = c // gf2.WORD, np.uint64(c % gf2.WORD)
            dense[:, j] = ((rref[:, w] >> s) & np.uint64(1)).astype(np.uint8)
        self._parity_map = dense

    def encode(self, info_bits):
        """Encode one info word (length k) into a codeword with zero syndrome."""
        return self.encode_batch(np.asarray(info_bits).reshape(1, -1))[0]

    def encode_batch(self, info_bits):
        """Encode a (frames, k) batch of info words into (frames, n) codewords."""
        info = np.asarray(info_bits, dtype=np.uint8) & 1
        if info.ndim != 2 or info.shape[1] != self.k:
            raise ValueError(f"expected (frames, {self.k}) info bits, got {info.shape}")
        parity = (info.astype(np.float32) @ self._parity_map.T.astype(np.float32))
        parity = (parity.astype(np.int64) & 1).astype(np.uint8)
        words = np.zeros((info.shape[0], self.h.n_cols), dtype=np.uint8)
        words[:, self.systematic_cols] = info
        words[:, self.parity_cols] = parity
        return words

    def extract_info(self, codeword):
        """Information bits of a codeword (or batch) at the systematic positions."""
        return np.asarray(codeword)[..., self.systematic_cols]


def encode_systematic(h, info_bits):
    """One-shot systematic encode; prefer SystematicEncoder for repeated use."""
    return SystematicEncoder(h).encode(info_bits)

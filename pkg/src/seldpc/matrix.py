"""Sparse GF(2) parity-check matrices, QC base matrices, and degree distributions.

The matrix type keeps both row-wise and column-wise adjacency because message
passing iterates in both directions.  Instances are immutable after
construction and safe to share across workers.
"""

import numpy as np

from . import gf2
from .errors import DegenerateGraph


class SparseBinaryMatrix:
    """Binary matrix stored as per-row sorted column supports plus the derived
    per-column row supports.

    Parameters
    ----------
    row_support : iterable of iterables of int
        Column indices of the ones in each row.  Duplicates are rejected.
    n_cols : int
        Number of columns (columns beyond the largest support index may be
        all-zero).
    """

    def __init__(self, row_support, n_cols):
        if n_cols < 1 or len(row_support) < 1:
            raise ValueError("matrix must have at least one row and one column")
        rows = []
        for i, sup in enumerate(row_support):
            arr = np.unique(np.asarray(list(sup), dtype=np.int64))
            if len(arr) != len(list(sup)):
                raise ValueError(f"duplicate column index in row {i}")
            if len(arr) and (arr[0] < 0 or arr[-1] >= n_cols):
                raise ValueError(f"column index out of range in row {i}")
            rows.append(arr)
        self.n_rows = len(rows)
        self.n_cols = int(n_cols)
        self.row_support = rows
        cols = [[] for _ in range(self.n_cols)]
        for i, arr in enumerate(rows):
            for c in arr:
                cols[c].append(i)
        self.col_support = [np.asarray(c, dtype=np.int64) for c in cols]
        self.n_edges = int(sum(len(r) for r in rows))
        self._packed = None
        self._csr = None

    # --- basic views -----------------------------------------------------

    def to_dense(self):
        d = np.zeros((self.n_rows, self.n_cols), dtype=np.uint8)
        for i, arr in enumerate(self.row_support):
            d[i, arr] = 1
        return d

    @property
    def packed(self):
        """Bit-packed rows (built on first use, then cached)."""
        if self._packed is None:
            self._packed = gf2.pack_rows(self.row_support, self.n_cols)
        return self._packed

    def csr(self):
        """(edge_col, row_ptr, edge_row) arrays with edges grouped by row."""
        if self._csr is None:
            edge_col = np.concatenate([r for r in self.row_support]) if self.n_edges else np.empty(0, np.int64)
            row_deg = np.array([len(r) for r in self.row_support], dtype=np.int64)
            row_ptr = np.concatenate(([0], np.cumsum(row_deg)))
            edge_row = np.repeat(np.arange(self.n_rows, dtype=np.int64), row_deg)
            self._csr = (edge_col, row_ptr, edge_row)
        return self._csr

    def row_degrees(self):
        return np.array([len(r) for r in self.row_support], dtype=np.int64)

    def col_degrees(self):
        return np.array([len(c) for c in self.col_support], dtype=np.int64)

    def syndrome(self, bits):
        """H @ bits mod 2 as a uint8 vector."""
        bits = np.asarray(bits, dtype=np.uint8) & 1
        if bits.shape[-1] != self.n_cols:
            raise ValueError("length mismatch")
        edge_col, _, edge_row = self.csr()
        return (np.bincount(edge_row, weights=bits[edge_col].astype(np.float64),
                            minlength=self.n_rows).astype(np.int64) & 1).astype(np.uint8)

    def __eq__(self, other):
        if not isinstance(other, SparseBinaryMatrix):
            return NotImplemented
        return (self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and all(np.array_equal(a, b) for a, b in zip(self.row_support, other.row_support)))

    def __repr__(self):
        return f"SparseBinaryMatrix({self.n_rows}x{self.n_cols}, {self.n_edges} ones)"


def gf2_rank(h, cols=None):
    """Rank over GF(2), optionally of the submatrix restricted to `cols`."""
    if cols is not None:
        cols = list(cols)
        if any(c < 0 or c >= h.n_cols for c in cols):
            raise ValueError("column index out of range")
    return gf2.rank(h.packed, h.n_cols, cols)


class QCBaseMatrix:
    """Quasi-cyclic base matrix: entries are circulant shifts, -1 marks a zero block."""

    def __init__(self, entries, z):
        entries = np.asarray(entries, dtype=np.int64)
        if entries.ndim != 2:
            raise ValueError("entries must be 2-D")
        if z < 1:
            raise ValueError("expansion factor must be >= 1")
        if entries.min() < -1 or entries.max() >= z:
            raise ValueError(f"entries must lie in [-1, {z - 1}]")
        self.entries = entries
        self.base_rows, self.base_cols = entries.shape
        self.z = int(z)

    def support(self):
        """Binary pattern of non-empty blocks as a SparseBinaryMatrix."""
        rows = [np.flatnonzero(self.entries[m] >= 0) for m in range(self.base_rows)]
        return SparseBinaryMatrix(rows, self.base_cols)

    def __repr__(self):
        return f"QCBaseMatrix({self.base_rows}x{self.base_cols}, z={self.z})"


def expand_qc(base):
    """Expand a QC base matrix: shift k becomes the z x z identity circulant with
    ones at (i, (i+k) mod z); -1 becomes the zero block."""
    z = base.z
    i = np.arange(z, dtype=np.int64)
    rows = [[] for _ in range(base.base_rows * z)]
    for m in range(base.base_rows):
        for c in np.flatnonzero(base.entries[m] >= 0):
            k = base.entries[m, c]
            cols = c * z + (i + k) % z
            for off in range(z):
                rows[m * z + off].append(cols[off])
    return SparseBinaryMatrix(rows, base.base_cols * z)


class DegreeDistribution:
    """Edge-perspective bit-node (lambda) and check-node (rho) degree fractions."""

    TOL = 1e-12

    def __init__(self, lam, rho):
        self.lam = {int(d): float(f) for d, f in lam.items() if f != 0.0}
        self.rho = {int(d): float(f) for d, f in rho.items() if f != 0.0}
        for name, dist in (("lambda", self.lam), ("rho", self.rho)):
            s = sum(dist.values())
            if abs(s - 1.0) > 1e-9:
                raise ValueError(f"{name} fractions sum to {s}, expected 1")
            if any(f < 0 or f > 1 for f in dist.values()):
                raise ValueError(f"{name} fractions must lie in [0, 1]")
            if any(d < 2 for d in dist):
                raise ValueError(f"{name} degrees must be >= 2")

    def avg_check_degree(self):
        """1 / integral of rho(x) on [0, 1]."""
        return 1.0 / sum(f / d for d, f in self.rho.items())

    def design_rate(self):
        return 1.0 - sum(f / d for d, f in self.rho.items()) / sum(f / d for d, f in self.lam.items())

    def __eq__(self, other):
        if not isinstance(other, DegreeDistribution):
            return NotImplemented
        return self.lam == other.lam and self.rho == other.rho

    def __repr__(self):
        return f"DegreeDistribution(lambda={self.lam}, rho={self.rho})"


def degree_distribution_of(h):
    """Edge-perspective degree distribution of a matrix.

    lambda_d is the fraction of edges incident to degree-d columns, rho_d the
    same for rows.  Raises DegenerateGraph on any zero row or column.
    """
    rdeg = h.row_degrees()
    cdeg = h.col_degrees()
    if (rdeg == 0).any() or (cdeg == 0).any():
        raise DegenerateGraph("matrix has a zero row or column")
    e = float(h.n_edges)
    lam = {}
    for d in np.unique(cdeg):
        lam[int(d)] = float(d * np.count_nonzero(cdeg == d) / e)
    rho = {}
    for d in np.unique(rdeg):
        rho[int(d)] = float(d * np.count_nonzero(rdeg == d) / e)
    return DegreeDistribution(lam, rho)


# --- file formats ---------------------------------------------------------


def write_alist(h, path):
    """Write MacKay alist format: "n_cols n_rows", max degrees, per-column and
    per-row degree lists, then 1-based index lists padded with zeros."""
    cdeg = h.col_degrees()
    rdeg = h.row_degrees()
    cmax, rmax = int(cdeg.max()), int(rdeg.max())
    lines = [f"{h.n_cols} {h.n_rows}", f"{cmax} {rmax}",
             " ".join(str(int(d)) for d in cdeg),
             " ".join(str(int(d)) for d in rdeg)]
    for c in range(h.n_cols):
        idx = [str(int(r) + 1) for r in h.col_support[c]]
        idx += ["0"] * (cmax - len(idx))
        lines.append(" ".join(idx))
    for r in range(h.n_rows):
        idx = [str(int(c) + 1) for c in h.row_support[r]]
        idx += ["0"] * (rmax - len(idx))
        lines.append(" ".join(idx))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def read_alist(path):
    with open(path) as f:
        tok = f.read().split()
    it = iter(tok)
    try:
        n_cols, n_rows = int(next(it)), int(next(it))
        cmax, rmax = int(next(it)), int(next(it))
        cdeg = [int(next(it)) for _ in range(n_cols)]
        rdeg = [int(next(it)) for _ in range(n_rows)]
        for c in range(n_cols):  # column lists (skipped, rows rebuild them)
            for _ in range(cmax):
                next(it)
        rows = []
        for r in range(n_rows):
            idx = [int(next(it)) for _ in range(rmax)]
            rows.append([v - 1 for v in idx if v > 0])
            if len(rows[-1]) != rdeg[r]:
                raise ValueError(f"row {r}: {len(rows[-1])} indices, degree says {rdeg[r]}")
    except StopIteration:
        raise ValueError(f"{path}: truncated alist file") from None
    del cdeg, cmax
    return SparseBinaryMatrix(rows, n_cols)


def write_qc_file(base, path):
    """Plain text QC format: "rows cols z" then shift rows with -1 for zero blocks."""
    with open(path, "w") as f:
        f.write(f"{base.base_rows} {base.base_cols} {base.z}\n")
        for m in range(base.base_rows):
            f.write(" ".join(str(int(v)) for v in base.entries[m]) + "\n")


def read_qc_file(path):
    with open(path) as f:
        tok = f.read().split()
    if len(tok) < 3:
        raise ValueError(f"{path}: missing header")
    rows, cols, z = int(tok[0]), int(tok[1]), int(tok[2])
    vals = [int(v) for v in tok[3:]]
    if len(vals) != rows * cols:
        raise ValueError(f"{path}: expected {rows * cols} entries, found {len(vals)}")
    return QCBaseMatrix(np.array(vals, dtype=np.int64).reshape(rows, cols), z)

"""Short-cycle enumeration on the Tanner graph.

Cycles are found by bounded depth-first walks out of each check node: a
length-2k cycle through check c is an alternating simple path
c, v_1, c_1, ..., v_k that closes on an unused edge (v_k, c).  Fixing
v_1 < v_k counts each cycle exactly once per (row, cycle) incidence.  Cost
grows quickly with max_len, hence the cap at 8.
"""

from collections import Counter

import numpy as np


def cycle_pairs(h, max_len):
    """Per-row Counter mapping (col_a, col_b) -> number of cycles of length
    <= max_len through this check whose two incident edges use those columns.

    The pair is exactly what a row split must separate to break the cycle.
    """
    if max_len not in (4, 6, 8):
        raise ValueError("max_len must be 4, 6 or 8")
    kmax = max_len // 2
    row_sets = [set(int(c) for c in r) for r in h.row_support]
    col_adj = [list(map(int, c)) for c in h.col_support]
    row_adj = [list(map(int, r)) for r in h.row_support]
    out = [Counter() for _ in range(h.n_rows)]

    for c0 in range(h.n_rows):
        sup0 = row_adj[c0]
        target = row_sets[c0]
        counter = out[c0]

        def walk(v_cur, v1, vars_used, checks_used, depth):
            if depth >= 2 and v_cur in target and v_cur > v1:
                counter[(v1, v_cur)] += 1
            if depth == kmax:
                return
            for c in col_adj[v_cur]:
                if c == c0 or c in checks_used:
                    continue
                checks_used.add(c)
                for v_next in row_adj[c]:
                    if v_next in vars_used:
                        continue
                    vars_used.add(v_next)
                    walk(v_next, v1, vars_used, checks_used, depth + 1)
                    vars_used.remove(v_next)
                checks_used.remove(c)

        for v1 in sup0:
            walk(v1, v1, {v1}, set(), 1)
    return out


def enumerate_short_cycles(h, max_len):
    """Number of Tanner-graph cycles of length <= max_len through each check node."""
    pairs = cycle_pairs(h, max_len)
    return np.array([sum(c.values()) for c in pairs], dtype=np.int64)


def counts_by_length(h, max_len):
    """Per-row counts split by cycle length, e.g. {4: ..., 6: ...}."""
    lengths = [l for l in (4, 6, 8) if l <= max_len]
    cum = {l: enumerate_short_cycles(h, l) for l in lengths}
    out = {}
    prev = np.zeros(h.n_rows, dtype=np.int64)
    for l in lengths:
        out[l] = cum[l] - prev
        prev = cum[l]
    return out


def total_cycles(h, max_len):
    """Global number of distinct cycles per length (row-incidence sums divided
    by the number of checks on each cycle)."""
    by_len = counts_by_length(h, max_len)
    return {l: int(arr.sum()) // (l // 2) for l, arr in by_len.items()}

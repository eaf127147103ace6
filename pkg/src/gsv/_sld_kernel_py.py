"""Pure-Python enumeration kernel; same contract as the compiled one.

Walks bit vectors r in binary-reflected Gray-code order, maintaining
s = adjacency * r with one row XOR per step, and histograms the
symplectic weight popcount(r | s).  Positions are Gray-code ranks t in
[start, stop); r at rank t is t ^ (t >> 1), and rank t flips bit
ctz(t) relative to rank t-1, so any contiguous range can be replayed
independently and partial histograms add up exactly.
"""

from __future__ import annotations


def histogram_range(rows, n: int, start: int, stop: int) -> list[int]:
    hist = [0] * (n + 1)
    if start >= stop:
        return hist
    rows = tuple(rows)
    r = start ^ (start >> 1)
    s = 0
    for i in range(n):
        if r >> i & 1:
            s ^= rows[i]
    hist[(r | s).bit_count()] += 1
    for t in range(start + 1, stop):
        b = (t & -t).bit_length() - 1
        r ^= 1 << b
        s ^= rows[b]
        hist[(r | s).bit_count()] += 1
    return hist

"""Pure-Python/numpy implementations of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same deterministic result; ``grkit.kernels`` picks one at import.
"""

import numpy as np

BACKEND = "python"

_CHUNK = 1 << 18


def rainbow_triangle(mat):
    """Lexicographically first (u, v, w), u < v < w, with three distinct colors."""
    n = mat.shape[0]
    for u in range(n - 2):
        cu = mat[u, u + 1:]
        sub = mat[u + 1:, u + 1:]
        bad = (cu[:, None] != cu[None, :]) & (sub != cu[:, None]) & (sub != cu[None, :])
        bad = np.triu(bad, 1)
        if bad.any():
            flat = int(np.argmax(bad))
            v, w = divmod(flat, n - u - 1)
            return (u, u + 1 + v, u + 1 + w)
    return None


def color_bitsets(mat, color):
    rows = np.packbits(mat == color, axis=1, bitorder="little")
    return tuple(int.from_bytes(r.tobytes(), "little") for r in rows)


def find_embedding(bits, n, earlier):
    m = len(earlier)
    if m == 0:
        return ()
    if m > n:
        return None
    full = (1 << n) - 1
    phi = [0] * m

    def extend(i, used):
        cand = full & ~used
        for j in earlier[i]:
            cand &= bits[phi[j]]
        while cand:
            low = cand & -cand
            phi[i] = low.bit_length() - 1
            if i + 1 == m or extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(phi) if extend(0, 0) else None


def module_closure(mat, seeds):
    n = mat.shape[0]
    inside = np.zeros(n, dtype=bool)
    seeds = list(dict.fromkeys(int(s) for s in seeds))
    inside[seeds] = True
    ref = mat[:, seeds[0]]
    queue = list(seeds)
    while queue:
        y = queue.pop()
        new = np.flatnonzero((mat[:, y] != ref) & ~inside)
        if new.size:
            inside[new] = True
            queue.extend(new.tolist())
    return inside


def first_avoiding(nbits, masks1, masks2):
    """Smallest x in [0, 2**nbits) such that no mask in masks1 is a subset of x
    and no mask in masks2 is a subset of ~x, or -1."""
    total = 1 << nbits
    m1 = np.asarray(masks1, dtype=np.int64)
    m2 = np.asarray(masks2, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        x = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        nx = ~x
        ok = np.ones(x.shape, dtype=bool)
        for m in m1:
            ok &= (x & m) != m
        for m in m2:
            ok &= (nx & m) != m
        if ok.any():
            return start + int(np.argmax(ok))
    return -1

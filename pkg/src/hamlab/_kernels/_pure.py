"""Pure-Python reference kernels.

These are the semantics-defining implementations of the two hot loops
(breadth-first rotation closure, subset DP for exact Hamilton cycles).
The compiled module ``hamlab._kernels._core`` mirrors them operation for
operation; the parity tests compare outputs array-for-array.  Keep this
file boring and explicit -- it defines what the fast path must do.
"""

from array import array

import numpy as np


def rotation_closure(rot_indptr, rot_indices, full_indptr, full_indices,
                     path, cap):
    """Breadth-first search over endpoint rotations of a fixed-anchor path.

    ``path`` lists vertices from the free end to the anchored end.  A chord
    {endpoint, w} of the rotation graph with w at interior position i of the
    endpoint's witness path yields a new endpoint path[i-1] (the rotation
    reverses the prefix up to w).  Every vertex becomes an endpoint at most
    once; the first discovery (queue order, then ascending chord scan) fixes
    its witness path.

    Scans of the full graph run first for each processed endpoint: an
    off-path neighbour aborts the whole search (the caller should extend the
    path instead), and an edge back to the anchored end is recorded as a
    closing opportunity (only meaningful when the path has >= 3 vertices).

    Returns (order, prev, pivot, paths, ext_idx, ext_vertex, close_idx):
    int32 arrays over discovery order -- endpoint vertex, parent index,
    rotation chord vertex, full witness path per endpoint -- plus the index
    of the aborting endpoint and its off-path neighbour (-1, -1 if none) and
    the index of the first closing endpoint (-1 if none).
    """
    ell = len(path) - 1
    n = len(rot_indptr) - 1
    fixed = int(path[ell])
    max_rows = min(max(int(cap), 1), ell + 1)

    on_path = np.zeros(n, dtype=bool)
    on_path[np.asarray(path)] = True
    disc = np.full(n, -1, dtype=np.int64)
    pos = [0] * n

    root = [int(v) for v in path]
    order = [root[0]]
    prev = [-1]
    pivot = [-1]
    paths = [root]
    disc[root[0]] = 0

    ext_idx = -1
    ext_vertex = -1
    close_idx = -1

    head = 0
    stop = False
    while head < len(order) and not stop:
        k = head
        head += 1
        e = order[k]
        pe = paths[k]

        for w in full_indices[full_indptr[e]:full_indptr[e + 1]]:
            w = int(w)
            if not on_path[w]:
                ext_idx = k
                ext_vertex = w
                stop = True
                break
            if w == fixed and close_idx < 0 and ell >= 2:
                close_idx = k
        if stop:
            break

        for i, v in enumerate(pe):
            pos[v] = i
        for w in rot_indices[rot_indptr[e]:rot_indptr[e + 1]]:
            w = int(w)
            if not on_path[w]:
                continue
            i = pos[w]
            if i < 1 or i > ell - 1:
                continue
            x = pe[i - 1]
            if disc[x] < 0:
                if len(order) >= max_rows:
                    stop = True
                    break
                disc[x] = len(order)
                order.append(x)
                prev.append(k)
                pivot.append(w)
                paths.append(pe[i - 1::-1] + pe[i:])
                if len(order) >= max_rows:
                    stop = True
                    break

    count = len(order)
    return (np.array(order, dtype=np.int32),
            np.array(prev, dtype=np.int32),
            np.array(pivot, dtype=np.int32),
            np.array(paths, dtype=np.int32).reshape(count, ell + 1),
            ext_idx, ext_vertex, close_idx)


def ham_dp(adj_masks):
    """Subset DP over paths anchored at vertex 0.

    dp[mask] is the bitmask of endpoints e such that some simple path visits
    exactly ``mask`` (which must contain vertex 0) and ends at e.  Returns
    the dp table (uint32, length 2**n) and the number of (mask, endpoint)
    states expanded.
    """
    n = len(adj_masks)
    size = 1 << n
    full = size - 1
    masks = [int(m) for m in adj_masks]
    dp = array("I", [0]) * size
    dp[1] = 1
    states = 0
    for mask in range(1, size, 2):
        ep = dp[mask]
        if not ep:
            continue
        states += ep.bit_count()
        free = full & ~mask
        while ep:
            low = ep & -ep
            ep ^= low
            cand = masks[low.bit_length() - 1] & free
            while cand:
                bit = cand & -cand
                cand ^= bit
                dp[mask | bit] |= bit
    return np.frombuffer(dp, dtype=np.uint32), states

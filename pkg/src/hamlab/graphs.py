"""Immutable undirected graphs on vertices 0..n-1, plus vertex-set algebra.

Graphs are stored in compressed sparse row form (``indptr``/``indices``
int arrays with each adjacency row sorted ascending) so the hot kernels can
walk neighbourhoods without touching Python objects.  All mutating-style
operations (union, subtract, ...) return new Graph instances; the arrays
of an existing Graph are marked read-only.
"""

import numpy as np

__all__ = [
    "Graph",
    "VertexSet",
    "build_graph",
    "empty_graph",
    "complete_graph",
    "union",
    "subtract",
    "neighborhood",
    "cross_edges",
    "connected",
]


class Graph:
    """Simple undirected graph in CSR form.

    Attributes
    ----------
    n : number of vertices (labels are exactly 0..n-1, no gaps)
    m : number of undirected edges
    indptr : int64 array of length n+1
    indices : int32 array of length 2m, row-sorted ascending
    """

    __slots__ = ("n", "m", "indptr", "indices")

    def __init__(self, n, indptr, indices):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        self.m = len(indices) // 2
        indptr.setflags(write=False)
        indices.setflags(write=False)

    def neighbors(self, v):
        """Sorted int32 array of neighbours of v (a view, do not mutate)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self):
        """All vertex degrees as an int64 array."""
        return np.diff(self.indptr)

    def has_edge(self, u, v):
        row = self.neighbors(u)
        k = np.searchsorted(row, v)
        return bool(k < len(row) and row[k] == v)

    def edge_array(self):
        """(m, 2) int32 array of edges with u < v, lexicographically sorted.

        This ordering is the canonical edge order used by samplers and
        adversaries; it is a pure function of the graph.
        """
        src = np.repeat(np.arange(self.n, dtype=np.int32), np.diff(self.indptr))
        keep = src < self.indices
        return np.column_stack((src[keep], self.indices[keep]))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.indptr, other.indptr)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.indices.tobytes()))


def _from_sorted_keys(n, keys):
    """Build a Graph from unique edge keys u * n + v (u < v)."""
    u = (keys // n).astype(np.int32)
    v = (keys % n).astype(np.int32)
    heads = np.concatenate((u, v))
    tails = np.concatenate((v, u))
    order = np.lexsort((tails, heads))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(heads, minlength=n), out=indptr[1:])
    return Graph(n, indptr, tails[order].astype(np.int32))


def build_graph(n, edges):
    """Construct a Graph from an iterable (or (k,2) array) of vertex pairs.

    Self-loops and out-of-range labels raise ValueError naming the offending
    pair.  Duplicate pairs (in either orientation) are collapsed.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative, got %d" % n)
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        return Graph(n, np.zeros(n + 1, dtype=np.int64),
                     np.empty(0, dtype=np.int32))
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be pairs, got shape %r" % (arr.shape,))
    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    bad = (lo < 0) | (hi >= n)
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        raise ValueError("edge (%d, %d) out of range for n=%d"
                         % (arr[k, 0], arr[k, 1], n))
    loops = lo == hi
    if loops.any():
        k = int(np.flatnonzero(loops)[0])
        raise ValueError("self-loop (%d, %d) not allowed" % (arr[k, 0], arr[k, 1]))
    keys = np.unique(lo * n + hi)
    return _from_sorted_keys(n, keys)


def empty_graph(n):
    return build_graph(n, [])


def complete_graph(n):
    u, v = np.triu_indices(n, k=1)
    return build_graph(n, np.column_stack((u, v)))


def _edge_keys(g):
    e = g.edge_array().astype(np.int64)
    return e[:, 0] * g.n + e[:, 1]


def union(g, h):
    """Edge union of two graphs on the same vertex set."""
    if g.n != h.n:
        raise ValueError("vertex counts differ: %d vs %d" % (g.n, h.n))
    return _from_sorted_keys(g.n, np.union1d(_edge_keys(g), _edge_keys(h)))


def subtract(g, h):
    """Edges of g that are not edges of h (vertex set unchanged)."""
    if g.n != h.n:
        raise ValueError("vertex counts differ: %d vs %d" % (g.n, h.n))
    return _from_sorted_keys(g.n, np.setdiff1d(_edge_keys(g), _edge_keys(h),
                                               assume_unique=True))


class VertexSet:
    """A set of vertices of an n-vertex graph.

    Keeps both a boolean membership mask (O(1) tests) and a sorted member
    array (cheap iteration); the two are consistent by construction.
    """

    __slots__ = ("n", "mask", "members")

    def __init__(self, n, mask, members):
        self.n = int(n)
        self.mask = mask
        self.members = members
        mask.setflags(write=False)
        members.setflags(write=False)

    @classmethod
    def from_members(cls, n, vertices):
        members = np.unique(np.asarray(list(vertices), dtype=np.int64))
        if members.size and (members[0] < 0 or members[-1] >= n):
            raise ValueError("vertex out of range for n=%d" % n)
        mask = np.zeros(n, dtype=bool)
        mask[members] = True
        return cls(n, mask, members.astype(np.int32))

    @classmethod
    def from_mask(cls, mask):
        mask = np.asarray(mask, dtype=bool)
        return cls(len(mask), mask.copy(),
                   np.flatnonzero(mask).astype(np.int32))

    @classmethod
    def full(cls, n):
        return cls(n, np.ones(n, dtype=bool), np.arange(n, dtype=np.int32))

    @classmethod
    def empty(cls, n):
        return cls(n, np.zeros(n, dtype=bool), np.empty(0, dtype=np.int32))

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.mask[v])

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(int(v) for v in self.members)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash((self.n, self.members.tobytes()))

    def __repr__(self):
        shown = list(self.members[:8])
        tail = ", ..." if len(self.members) > 8 else ""
        return "VertexSet(n=%d, {%s%s})" % (
            self.n, ", ".join(str(v) for v in shown), tail)

    def complement(self):
        return VertexSet.from_mask(~self.mask)

    def intersect(self, other):
        self._check(other)
        return VertexSet.from_mask(self.mask & other.mask)

    def union(self, other):
        self._check(other)
        return VertexSet.from_mask(self.mask | other.mask)

    def difference(self, other):
        self._check(other)
        return VertexSet.from_mask(self.mask & ~other.mask)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("vertex counts differ: %d vs %d" % (self.n, other.n))


def neighborhood(g, xs):
    """External neighbourhood: vertices outside xs adjacent to some member.

    Matches the convention e(X) counts each internal edge once and N(X)
    excludes X itself.
    """
    if xs.n != g.n:
        raise ValueError("vertex counts differ: %d vs %d" % (xs.n, g.n))
    hit = np.zeros(g.n, dtype=bool)
    for v in xs.members:
        hit[g.neighbors(v)] = True
    hit &= ~xs.mask
    return VertexSet.from_mask(hit)


def cross_edges(g, xs, ys):
    """Number of edges with one endpoint in xs and the other in ys.

    For overlapping sets an edge inside the overlap is counted twice (once
    per orientation), which is the e(X, Y) convention under which
    e(X, X) = 2 * e(X).
    """
    if xs.n != g.n or ys.n != g.n:
        raise ValueError("vertex set size mismatch")
    total = 0
    for v in xs.members:
        total += int(ys.mask[g.neighbors(v)].sum())
    return total


def connected(g):
    """True iff the graph has a single connected component (n <= 1: True)."""
    if g.n <= 1:
        return True
    if g.m < g.n - 1:
        return False
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(int(w))
    return count == g.n

"""Path rotations, endpoint closures, and expansion certificates.

A path is written from its *free end* to its *anchor*: rotations pivot
around chords incident to the free end and never move the anchor.  Given a
path P = (v_0, ..., v_l) and a chord {v_0, v_i}, the rotation at pivot
index i produces

    P' = (v_{i-1}, ..., v_0, v_i, ..., v_l),

a path on the same vertex set whose free end is now v_{i-1}; the edge
{v_{i-1}, v_i} is said to be broken by the rotation.  Iterating rotations
from P yields the *endpoint closure*: the set of vertices that can serve as
a free end while the anchor stays put.  A large closure is the engine
behind both the cycle-closing step of the solver and the expansion
certificates used to audit residual graphs after adversarial deletions.

The closure here is the witness-path variant: each endpoint is discovered
at most once (breadth-first over endpoints, chords scanned in ascending
vertex order) and keeps the witness path of its first discovery.  This
costs O(|closure| * maxdeg) chord scans instead of enumerating every
reachable rotated path, at the price that a handful of endpoints reachable
only through later witness paths can be missed.  The trade is deliberate --
closures run inside the solver's innermost loop -- and the test suite pins
both the exact semantics and a frozen example of the difference.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import VertexSet

__all__ = [
    "PathSeq",
    "RotationClosure",
    "RECertificate",
    "rotate_once",
    "endpoint_closure",
    "re_certificate",
]


@dataclass(frozen=True)
class PathSeq:
    """An oriented simple path: verts[0] is the free end, verts[-1] the anchor."""

    verts: tuple

    def __post_init__(self):
        if not self.verts:
            raise ValueError("a path needs at least one vertex")
        if len(set(self.verts)) != len(self.verts):
            raise ValueError("path vertices must be distinct: %r" % (self.verts,))

    @property
    def free_end(self):
        return self.verts[0]

    @property
    def anchor(self):
        return self.verts[-1]

    @property
    def length(self):
        """Edge count (one less than the vertex count)."""
        return len(self.verts) - 1

    def reversed(self):
        return PathSeq(tuple(reversed(self.verts)))

    def __len__(self):
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)


def rotate_once(path, pivot_index):
    """Apply one rotation at the given pivot position (1 <= i <= length).

    Pure sequence surgery: the caller is responsible for the chord
    {free end, verts[i]} actually existing in whatever graph is in play.
    Self-inverse: rotating the result at the same index returns the input.
    """
    verts = path.verts
    i = pivot_index
    if not 1 <= i <= len(verts) - 1:
        raise ValueError("pivot index %d out of range for path of %d vertices"
                         % (i, len(verts)))
    return PathSeq(verts[i - 1::-1] + verts[i:])


class RotationClosure:
    """Result of the breadth-first endpoint search from one starting path.

    Endpoints are indexed in discovery order; index 0 is the starting free
    end.  For each endpoint the closure keeps its witness path, the parent
    endpoint it was discovered from, and the pivot (chord) vertex used.
    """

    def __init__(self, n, anchor, order, prev, pivot, paths,
                 ext_idx, ext_vertex, close_idx, cap):
        self.n = n
        self.anchor = anchor
        self.order = order
        self.prev = prev
        self.pivot = pivot
        self.paths = paths
        self.cap = cap
        self._index = {int(v): k for k, v in enumerate(order)}
        self.extension = ((int(order[ext_idx]), int(ext_vertex))
                          if ext_idx >= 0 else None)
        self.closing = int(order[close_idx]) if close_idx >= 0 else None

    @property
    def endpoints(self):
        """All discovered free ends, as a VertexSet."""
        return VertexSet.from_members(self.n, self.order)

    @property
    def aborted(self):
        """True when the search stopped early on an extension opportunity."""
        return self.extension is not None

    def witness_path(self, v):
        """The recorded path whose free end is v (anchor unchanged)."""
        return PathSeq(tuple(int(x) for x in self.paths[self._index[int(v)]]))

    def parent_of(self, v):
        """(parent endpoint, pivot vertex) for v, or None for the start."""
        k = self._index[int(v)]
        if self.prev[k] < 0:
            return None
        return int(self.order[self.prev[k]]), int(self.pivot[k])

    def broken_edges(self, v):
        """Edges broken along the discovery chain from the start to v."""
        k = self._index[int(v)]
        out = set()
        while self.prev[k] >= 0:
            pe = self.paths[self.prev[k]]
            w = int(self.pivot[k])
            i = int(np.flatnonzero(pe == w)[0])
            out.add(frozenset((int(pe[i - 1]), w)))
            k = self.prev[k]
        return out

    def __repr__(self):
        return ("RotationClosure(endpoints=%d, anchor=%d, extension=%r, "
                "closing=%r)" % (len(self.order), self.anchor,
                                 self.extension, self.closing))


def endpoint_closure(g, path, cap=None, probe=None):
    """Breadth-first rotation closure of ``path`` in ``g``.

    Chords for rotations are read from ``g``.  Extension and cycle-closing
    probes are read from ``probe`` (default: ``g`` itself); the two-phase
    solver passes the union graph there while rotating only within the
    thinned graph.  The search aborts as soon as some discovered free end
    has a probe-graph neighbour off the path -- lengthening the path beats
    collecting more endpoints.

    ``cap`` bounds the number of endpoints discovered (default n).  Path
    vertices must be valid labels; path edges are taken on faith.
    """
    if probe is None:
        probe = g
    if probe.n != g.n:
        raise ValueError("rotation and probe graphs disagree on n")
    if not isinstance(path, PathSeq):
        path = PathSeq(tuple(int(v) for v in path))
    arr = np.fromiter(path.verts, dtype=np.int32, count=len(path))
    if arr.min() < 0 or arr.max() >= g.n:
        raise ValueError("path vertex out of range for n=%d" % g.n)
    if cap is None:
        cap = g.n
    order, prev, pivot, paths, ext_idx, ext_vertex, close_idx = (
        _kernels.rotation_closure(g.indptr, g.indices,
                                  probe.indptr, probe.indices, arr, cap))
    return RotationClosure(g.n, path.anchor, order, prev, pivot, paths,
                           ext_idx, ext_vertex, close_idx, cap)


@dataclass
class RECertificate:
    """Outcome of auditing a path for two-sided endpoint expansion.

    status is one of:
      * ``extendable`` -- some closure hit an off-path neighbour, so the
        path is not maximal and the audit is moot;
      * ``satisfied`` -- the free-end closure has at least delta * n
        endpoints, and for every sampled free end v the closure of v's
        reversed witness path (anchor moved to v) is at least as large;
      * ``violated`` -- some inspected closure is too small.

    starts is the free-end closure; ends_by_start maps each sampled free
    end to the endpoint set found from its reversed witness path.
    """

    status: str
    delta: float
    n: int
    starts: VertexSet
    ends_by_start: dict

    @property
    def required(self):
        return self.delta * self.n

    def to_json_dict(self):
        return {
            "status": self.status,
            "delta": self.delta,
            "n": self.n,
            "required": self.required,
            "start_count": len(self.starts),
            "starts": [int(v) for v in self.starts],
            "ends_by_start": {str(v): sorted(int(x) for x in s)
                              for v, s in self.ends_by_start.items()},
        }


def re_certificate(g, path, delta, sample=8):
    """Audit whether ``path`` exhibits delta-expansion of rotation endpoints.

    Runs the free-end closure, then re-anchors at up to ``sample`` of the
    discovered endpoints (ascending vertex order) and sizes each reverse
    closure.  Any extension opportunity anywhere short-circuits to status
    ``extendable``.
    """
    if not 0.0 < delta <= 1.0:
        raise ValueError("delta must lie in (0, 1], got %r" % (delta,))
    if sample < 0:
        raise ValueError("sample count must be non-negative")
    closure = endpoint_closure(g, path)
    if closure.aborted:
        return RECertificate("extendable", delta, g.n, closure.endpoints, {})
    starts = closure.endpoints
    need = delta * g.n
    ok = len(starts) >= need
    ends = {}
    for v in sorted(starts)[:sample]:
        back = endpoint_closure(g, closure.witness_path(v).reversed())
        if back.aborted:
            return RECertificate("extendable", delta, g.n, starts, ends)
        ends[v] = back.endpoints
        ok = ok and len(ends[v]) >= need
    return RECertificate("satisfied" if ok else "violated",
                         delta, g.n, starts, ends)

"""Rotation-extension Hamilton cycle solver.

The solver grows a maximal path, then alternates three moves until a
spanning cycle appears: (1) extend the path when any free end sees an
off-path vertex; (2) close a cycle when some rotation endpoint is adjacent
to the anchor, reopening non-spanning cycles through an outside edge into a
strictly longer path; (3) when the free-end closure is exhausted, re-anchor
at a few of its endpoints and rotate the opposite end looking for a closing
pair.  Every move strictly lengthens the path or terminates, so each
attempt finishes; stagnation triggers a restart from a fresh seeded start
vertex.

Two-phase mode (``hamilton_split``) rotates only within ``g_rot`` while
extensions and closing probes may also use ``g_ext``: holding a reserve of
edges out of the closure keeps late closing edges "fresh" relative to the
rotation structure.  ``hamilton(g, cfg)`` is literally
``hamilton_split(g, empty, cfg)``.

This is a heuristic: a ``failed`` outcome is evidence, not a certificate of
non-Hamiltonicity (the regimes with guarantees are asymptotic).  Soundness
is absolute, though -- a ``hamiltonian`` outcome always carries a cycle
that was validated against the input edges.
"""

import time
from dataclasses import dataclass

from .graphs import connected, empty_graph, union
from .rng import mix64
from .rotation import PathSeq, endpoint_closure

__all__ = [
    "SolveConfig",
    "SolveOutcome",
    "extend",
    "hamilton",
    "hamilton_split",
    "validate_cycle",
]

# how many closure endpoints get the opposite-end treatment when stuck
_REANCHOR_SAMPLE = 8


@dataclass(frozen=True)
class SolveConfig:
    delta: float = 0.3          # edge fraction reserved for phase two (split mode)
    max_restarts: int = 20      # total attempts, each from a fresh start vertex
    closure_cap: int | None = None   # endpoint cap per closure (None: n)
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.delta <= 1.0:
            raise ValueError("delta must lie in (0, 1], got %r" % (self.delta,))
        if self.max_restarts < 1:
            raise ValueError("max_restarts must be >= 1")
        if self.closure_cap is not None and self.closure_cap < 1:
            raise ValueError("closure_cap must be >= 1 when given")


@dataclass(frozen=True)
class SolveOutcome:
    status: str                 # "hamiltonian" | "failed"
    cycle: tuple | None
    rotations: int
    extensions: int
    restarts: int
    millis: float
    reason: str | None = None

    def to_json_dict(self):
        return {
            "status": self.status,
            "cycle": None if self.cycle is None else list(self.cycle),
            "rotations": self.rotations,
            "extensions": self.extensions,
            "restarts": self.restarts,
            "millis": self.millis,
        }


def validate_cycle(g, cycle):
    """True iff ``cycle`` is a spanning cycle of g (every vertex once,
    cyclically consecutive pairs all edges)."""
    seq = tuple(cycle)
    if len(seq) != g.n or len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1]))


def extend(g, p):
    """Lengthen p by one vertex if possible, else None.

    The free end is tried first, then the anchor; among eligible neighbours
    the smallest id wins.  Deterministic.
    """
    members = set(p.verts)
    for w in g.neighbors(p.free_end):
        w = int(w)
        if w not in members:
            return PathSeq((w,) + p.verts)
    for w in g.neighbors(p.anchor):
        w = int(w)
        if w not in members:
            return PathSeq(p.verts + (w,))
    return None


def _greedy_path(g, start):
    """Walk from start, always to the smallest-id unvisited neighbour."""
    seen = {start}
    walk = [start]
    cur = start
    while True:
        nxt = -1
        for w in g.neighbors(cur):
            if int(w) not in seen:
                nxt = int(w)
                break
        if nxt < 0:
            return PathSeq(tuple(reversed(walk)))
        seen.add(nxt)
        walk.append(nxt)
        cur = nxt


class _Stats:
    __slots__ = ("rotations", "extensions")

    def __init__(self):
        self.rotations = 0
        self.extensions = 0


def _reopen(full, cyc_verts):
    """Turn a non-spanning cycle into a longer path via an outside edge.

    Picks the smallest-id cycle vertex with a neighbour outside the cycle
    (then the smallest such neighbour).  Returns None when no such edge
    exists, which for a connected graph means the cycle was spanning.
    """
    members = set(cyc_verts)
    k = len(cyc_verts)
    for u in sorted(members):
        w_out = -1
        for w in full.neighbors(u):
            if int(w) not in members:
                w_out = int(w)
                break
        if w_out >= 0:
            j = cyc_verts.index(u)
            rolled = cyc_verts[j:] + cyc_verts[:j]
            return PathSeq((w_out,) + rolled)
    return None


def _attempt(g_rot, full, start, cfg, stats):
    """One solve attempt. Returns a spanning cycle tuple or None."""
    n = full.n
    cap = cfg.closure_cap if cfg.closure_cap is not None else n
    path = _greedy_path(full, start)
    guard = 0
    while True:
        while True:
            longer = extend(full, path)
            if longer is None:
                break
            path = longer
            stats.extensions += 1
        prev_len = len(path)

        cl = endpoint_closure(g_rot, path, cap=cap, probe=full)
        stats.rotations += len(cl.order) - 1
        progressed = False

        if cl.extension is not None:
            v, w = cl.extension
            path = PathSeq((w,) + cl.witness_path(v).verts)
            stats.extensions += 1
            progressed = True
        elif cl.closing is not None:
            cyc = cl.witness_path(cl.closing).verts
            if len(cyc) == n:
                return cyc
            path = _reopen(full, cyc)
            if path is None:
                return None
            stats.extensions += 1
            progressed = True
        else:
            for v in sorted(cl.endpoints)[:_REANCHOR_SAMPLE]:
                back = endpoint_closure(
                    g_rot, cl.witness_path(v).reversed(), cap=cap, probe=full)
                stats.rotations += len(back.order) - 1
                if back.extension is not None:
                    bv, bw = back.extension
                    path = PathSeq((bw,) + back.witness_path(bv).verts)
                    stats.extensions += 1
                    progressed = True
                    break
                if back.closing is not None:
                    cyc = back.witness_path(back.closing).verts
                    if len(cyc) == n:
                        return cyc
                    path = _reopen(full, cyc)
                    if path is None:
                        return None
                    stats.extensions += 1
                    progressed = True
                    break

        if not progressed:
            return None
        # every move above lengthens the path; a repeat means a logic bug,
        # so bail out to a restart rather than spin
        if len(path) <= prev_len:
            guard += 1
            if guard > cap:
                return None


def hamilton_split(g_rot, g_ext, cfg=SolveConfig()):
    """Solve with rotations confined to g_rot and probes on g_rot ∪ g_ext."""
    if g_rot.n != g_ext.n:
        raise ValueError("graphs disagree on n: %d vs %d" % (g_rot.n, g_ext.n))
    if g_rot.n < 3:
        raise ValueError("need at least 3 vertices, got %d" % g_rot.n)
    t0 = time.perf_counter()
    full = union(g_rot, g_ext) if g_ext.m else g_rot
    stats = _Stats()

    def done(status, cycle, attempts, reason=None):
        ms = (time.perf_counter() - t0) * 1000.0
        return SolveOutcome(status, cycle, stats.rotations, stats.extensions,
                            max(attempts - 1, 0), ms, reason)

    if not connected(full):
        return done("failed", None, 1, reason="disconnected")

    for attempt in range(cfg.max_restarts):
        start = mix64(cfg.seed, attempt) % full.n
        cyc = _attempt(g_rot, full, start, cfg, stats)
        if cyc is not None:
            assert validate_cycle(full, cyc), "solver produced an invalid cycle"
            return done("hamiltonian", cyc, attempt + 1)
    return done("failed", None, cfg.max_restarts, reason="exhausted restarts")


def hamilton(g, cfg=SolveConfig()):
    """Rotation-extension solve on a single graph (no reserve phase)."""
    return hamilton_split(g, empty_graph(g.n), cfg)

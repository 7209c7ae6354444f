"""Exact Hamilton-cycle decision for small graphs.

Subset dynamic programming anchored at vertex 0: dp[mask] holds the bitmask
of endpoints reachable by simple paths covering exactly ``mask``.  Memory
is 4 * 2**n bytes, so the decision is capped at n = 24 (64 MiB); beyond
that the rotation-extension solver is the tool, not this.

Used as ground truth in tests and to confirm solver failures on small
instances in the Monte Carlo harness.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import connected

__all__ = ["OracleResult", "exact_hamiltonian", "HARD_LIMIT_N"]

HARD_LIMIT_N = 24


@dataclass(frozen=True)
class OracleResult:
    hamiltonian: bool
    cycle: tuple | None
    states_explored: int

    def to_json_dict(self):
        return {
            "hamiltonian": self.hamiltonian,
            "cycle": None if self.cycle is None else list(self.cycle),
            "states_explored": self.states_explored,
        }


def _reconstruct(dp, adj_masks, n):
    full = (1 << n) - 1
    final = int(dp[full]) & adj_masks[0]
    if final == 0:
        return None
    seq = []
    cur = (final & -final).bit_length() - 1
    mask = full
    seq.append(cur)
    while mask != 1:
        prev_mask = mask ^ (1 << cur)
        prevs = int(dp[prev_mask]) & adj_masks[cur]
        cur = (prevs & -prevs).bit_length() - 1
        seq.append(cur)
        mask = prev_mask
    seq.reverse()
    return tuple(seq)


def exact_hamiltonian(g, limit_n=HARD_LIMIT_N):
    """Decide Hamiltonicity of g exactly, with a witness cycle if one exists.

    Raises ValueError above the size cap instead of silently grinding:
    callers with bigger graphs should use the rotation-extension solver.
    """
    cap = min(limit_n, HARD_LIMIT_N)
    if g.n > cap:
        raise ValueError(
            "exact decision is capped at n=%d (got n=%d); "
            "use the rotation-extension solver for larger graphs"
            % (cap, g.n))
    if g.n < 3:
        return OracleResult(False, None, 0)
    degs = g.degrees()
    if int(degs.min()) < 2 or not connected(g):
        return OracleResult(False, None, 0)

    adj_masks = np.zeros(g.n, dtype=np.uint32)
    for v in range(g.n):
        mask = 0
        for w in g.neighbors(v):
            mask |= 1 << int(w)
        adj_masks[v] = mask
    dp, states = _kernels.ham_dp(adj_masks)
    cycle = _reconstruct(dp, [int(m) for m in adj_masks], g.n)
    if cycle is None:
        return OracleResult(False, None, states)
    # sanity: the witness must be a genuine Hamilton cycle
    assert len(cycle) == g.n and len(set(cycle)) == g.n
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert g.has_edge(a, b), "reconstructed cycle uses a non-edge"
    return OracleResult(True, cycle, states)

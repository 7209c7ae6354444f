"""hamlab: rotation-extension Hamiltonicity engine and resilience lab.

The package studies how many adversarial edge deletions a sparse random
graph survives before losing its Hamilton cycle: sample G(n, p), delete
edges under per-vertex budgets, solve by rotation-extension search, and
aggregate Monte Carlo curves around the critical deletion fraction.
"""

from ._kernels import BACKEND as kernel_backend
from .adversary import (BudgetVector, DeletionGraph, bipartition_attack,
                        check_budget, isolation_attack, random_attack,
                        uniform_budget)
from .edgelist import (dumps_edgelist, loads_edgelist, read_edgelist,
                       write_edgelist)
from .gnp import GnpParams, SplitResult, sample_gnp, sprinkle
from .graphs import (Graph, VertexSet, build_graph, complete_graph, connected,
                     cross_edges, empty_graph, neighborhood, subtract, union)
from .harness import (AdversarySpec, CellRow, SweepConfig, ThresholdResult,
                      TrialRecord, estimate_threshold, run_sweep, rows_to_csv,
                      wilson_interval, write_csv)
from .oracle import OracleResult, exact_hamiltonian
from .rng import SplitMix64, mix64
from .rotation import (PathSeq, RECertificate, RotationClosure,
                       endpoint_closure, re_certificate, rotate_once)
from .solver import (SolveConfig, SolveOutcome, extend, hamilton,
                     hamilton_split, validate_cycle)
from .statcheck import (CheckReport, check_degrees, check_density,
                        check_large_expansion, check_small_expansion,
                        run_battery)

__version__ = "0.1.0"

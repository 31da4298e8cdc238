"""Distance-based lower bounds on strong structural controllability.

Given an undirected network driven from a set of leader nodes, the longest
sequence of distance-to-leader vectors in which every element is strictly
smaller than all later ones in some coordinate lower-bounds the rank of the
controllability matrix for every choice of positive edge weights. This
package computes that bound exactly (recursion and a compressed dynamic
program), approximates it in near-linear time, compares it against zero
forcing and closed forms on paths and cycles, and validates everything
against small numeric oracles.
"""

from .dlv import (
    CPartition,
    DlvPointSet,
    PmiSequence,
    build_dlv,
    conflict_inclusion_bound,
    detect_conflict,
    min_sets,
    point_str,
    validate_pmi,
)
from .errors import (
    BadParams,
    BadWeights,
    Disconnected,
    DisconnectedAfterRetries,
    GraphDisconnected,
    InputTooLarge,
    InvalidEdge,
    InvariantViolation,
    SscBoundError,
    TableTooLarge,
    TooFewLeaders,
    TooLarge,
    TooSmall,
    WrongFamily,
)
from .exact import (
    DEFAULT_CELL_CAP,
    DpSolve,
    compress_coordinates,
    indicator,
    pmi_dp,
    pmi_dp_length,
    pmi_recursive,
    solve_dp,
)
from .graph import (
    Graph,
    LeaderSet,
    bfs_distances,
    connected_components,
    derive_seed,
    diameter,
    format_edge_list,
    gen_barabasi_albert,
    gen_cycle,
    gen_erdos_renyi,
    gen_path,
    is_connected,
    make_rng,
    new_graph,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .greedy import greedy_gap_family, pmi_greedy
from .oracles import (
    DEFAULT_RANK_TOL,
    RankSample,
    RankDominanceReport,
    brute_force_pmi,
    controllability_rank,
    verify_rank_dominance,
    weighted_laplacian,
)
from .reports import (
    ALL_METHODS,
    CSV_HEADER,
    BoundReport,
    SweepSpec,
    closed_form_bound,
    run_bound,
    run_sweep,
    sweep_rows_to_csv,
)
from .topology import (
    cycle_bound,
    full_pmi_witness,
    is_cycle_graph,
    is_path_graph,
    min_leader_distance_bound,
    path_bound,
)
from .zero_forcing import DerivedSet, derived_set, is_zfs

__version__ = "0.1.0"

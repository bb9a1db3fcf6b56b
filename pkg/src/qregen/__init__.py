"""Entanglement-assisted exact-repair regenerating codes at desk scale.

Encode a file across n nodes with a product-matrix code over GF(p),
retrieve it from any k nodes, and regenerate a failed node exactly from
d helpers by classically simulating CSS stabilizer syndrome extraction.
At the simultaneous optimum both the per-node storage and the repair
download equal B/k.
"""

from .css import RepairCSS, build_repair_css, check_dual_containment, grs_dual_weights
from .gf import GF
from .matrix import Mat, blkdiag, solve, vandermonde
from .pmcode import (
    MessagePair,
    NodeStorage,
    SystemParams,
    encode,
    encode_file,
    make_params,
    pack_file,
    pack_message,
    retrieve,
    retrieve_file,
    unpack_file,
    unpack_message,
)
from .repair import (
    HelperPayload,
    RepairTranscript,
    SubfilePlan,
    bandwidth_report,
    helper_encode,
    plan_subfiles,
    run_repair,
    run_repair_extended,
)
from .rng import SplitMix64
from .stabilizer import (
    PauliError,
    StabGroup,
    Syndrome,
    prepare_codespace,
    syndrome_linear,
    syndrome_statevector,
    syndrome_symplectic,
)
from .tradeoff import (
    TradeoffPoint,
    classical_feasible,
    classical_msr_bandwidth,
    optimal_point,
    quantum_feasible,
    tradeoff_table,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "Mat",
    "MessagePair",
    "NodeStorage",
    "PauliError",
    "RepairCSS",
    "RepairTranscript",
    "HelperPayload",
    "SplitMix64",
    "StabGroup",
    "SubfilePlan",
    "Syndrome",
    "SystemParams",
    "TradeoffPoint",
    "bandwidth_report",
    "blkdiag",
    "build_repair_css",
    "check_dual_containment",
    "classical_feasible",
    "classical_msr_bandwidth",
    "encode",
    "encode_file",
    "grs_dual_weights",
    "helper_encode",
    "make_params",
    "optimal_point",
    "pack_file",
    "pack_message",
    "plan_subfiles",
    "prepare_codespace",
    "quantum_feasible",
    "retrieve",
    "retrieve_file",
    "run_repair",
    "run_repair_extended",
    "solve",
    "syndrome_linear",
    "syndrome_statevector",
    "syndrome_symplectic",
    "tradeoff_table",
    "unpack_file",
    "unpack_message",
    "vandermonde",
]

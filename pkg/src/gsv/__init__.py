"""Graph-state stabilizer analysis toolkit.

Construct qubit graph states as GF(2) adjacency matrices, enumerate
their stabilizer groups, compute sector length distributions with their
noise decay and entanglement-threshold bounds, and serve it all over a
CLI and a JSON HTTP API with a persistent result cache.
"""

__version__ = "0.1.0"

# Bumping this invalidates cached SLD records (they are recomputed and
# verified instead of trusted).
ENGINE_VERSION = __version__

from .errors import (
    AutoLimitExceeded,
    CacheIntegrityError,
    ComputationRefusedError,
    DomainError,
    GraphIdError,
    GsvError,
    HardCapExceeded,
    LoopEdgeError,
)
from .graph import (
    N_MAX,
    Graph,
    GraphKind,
    GraphProperties,
    SldType,
    VertexParity,
    decode_graph_id,
    encode_graph_id,
    from_edges,
    generate,
    graph_from_json,
    hex_length,
    new_graph,
)
from .sld import (
    AUTO_LIMIT,
    HARD_CAP,
    SLD,
    ComputePolicy,
    DecayedSLD,
    ThresholdReport,
    WeightDistribution,
    approximate_sld,
    auto_compute_policy,
    closed_form_ghz,
    closed_form_ghz_tensor_zero,
    decay,
    edgeless_sld,
    ensure_computable,
    sld_bruteforce_connected,
    sld_combine,
    sld_of_graph,
    threshold_distillation,
    threshold_majorization,
    threshold_n_sector,
    threshold_report,
    weight_probability,
)
from .stabilizer import (
    ENUMERATION_CAP,
    MembershipResult,
    PauliOperator,
    StabilizerElement,
    adjacency_times,
    enumerate_stabilizers,
    membership,
    quadratic_form,
    render_pauli,
    stabilizer_for,
    symplectic_weight,
)

__all__ = [name for name in dir() if not name.startswith("_")]

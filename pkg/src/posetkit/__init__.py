"""posetkit: chain-antichain duality on finite and lazily-countable posets."""

from .core import (
    Antichain,
    AntichainPartition,
    Chain,
    Comparison,
    CycleError,
    DuplicateLabelError,
    EmptyPosetError,
    Poset,
    PosetError,
    UnknownElementError,
)
from .decomposition import (
    ComponentChain,
    GraphKind,
    GraphView,
    InvalidPartWitnessError,
    LabelCollisionError,
    Witness,
    combine_witnesses,
    graph_view,
    inc_components,
    lex_sum,
    linear_sum,
)
from .duality import (
    BudgetExceededError,
    KWitness,
    Matching,
    NotMaximumMatchingError,
    SearchBudget,
    SplitBipartite,
    VertexCover,
    dilworth,
    k_witness_search,
    koenig_cover,
    max_matching,
    maximum_chain,
    mirsky_levels,
    split_bipartite,
    width,
)
from .lazy import (
    BfsLayering,
    CertificateViolationError,
    LazyPoset,
    OmegaCertificate,
    OracleInconsistencyError,
    SplitReport,
    UnknownFamilyError,
    bfs_layers,
    builtin_certificate,
    builtin_family,
    prefix,
    verify_omega_split,
)
from .oracle import (
    bruteforce_max_antichain,
    bruteforce_pattern,
    bruteforce_witness,
    enumerate_posets,
)
from .recognition import (
    IncDegreeProfile,
    Pattern,
    PatternEmbedding,
    find_pattern,
    inc_degree_profile,
    inc_neighborhood_height,
    is_semiorder,
    semiorder_from_unit_intervals,
)
from .witness import (
    ValidationReport,
    WitnessMethod,
    build_witness,
    validate_k_witness,
    validate_witness,
)

__version__ = "0.1.0"

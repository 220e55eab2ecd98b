"""Supermagic covering labelings of amalgamation-style graph families.

Construct banana trees, firecrackers, flowers and general amalgamations,
label them with the explicit supermagic constructions, and certify the
result from first principles by enumerating every copy of the pattern.
"""

from . import errors
from .families import (
    CopyStructure,
    FamilySpec,
    amalgamate,
    amalgamate_on_subgraph,
    banana,
    banana_unit,
    construct_family,
    cycle,
    firecracker,
    firecracker_unit,
    flower,
    k4_minus,
    parse_family_spec,
    path,
    path_attach,
    star,
    wheel,
)
from .graph import (
    Graph,
    TotalLabeling,
    build_graph,
    edge_key,
    element_name,
    graph_from_json,
    labels_from_json,
    parse_element,
    total_label,
)
from .isocover import (
    CopySet,
    count_copies,
    embedding_witness,
    enumerate_copies,
    enumerate_embeddings,
    has_h_covering,
)
from .labelings import (
    PermutationQuadruple,
    PhiCheck,
    amalgamation_magic_sum,
    default_flower_permutations,
    flower_magic_sum,
    label_amalgamation,
    label_family,
    label_flower,
    label_generalized_amalgamation,
    label_path_attach,
    path_attach_magic_sum,
    phi_check,
)
from .search import (
    Count,
    Exhausted,
    NoSolution,
    SearchOptions,
    Solution,
    search_supermagic,
)
from .verify import VerificationReport, copy_sum, verify_supermagic

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

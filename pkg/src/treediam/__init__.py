"""treediam: tree-decompositions of finite multigraphs at desk scale.

The toolkit covers the multigraph data model with Menger-style disjoint
path certificates, tree-decompositions with linkedness and shortness
checks, the diameter-shortening rewiring pass, exact brute-force oracles
(tree-width, tree-diameter, short linked witnesses, enumeration up to
isomorphism), embeddings under roots/colors/label dominance, and the
good-pair scanner for well-quasi-ordering experiments.
"""

from .decomp import (
    Adhesion,
    LinkedCheck,
    SeparatorFamily,
    TreeDecomposition,
    ValidationReport,
    adhesion,
    adhesion_equality_check,
    adhesions,
    combine_components,
    diameter,
    is_linked,
    is_short,
    separator_family,
    validate,
    width,
)
from .embed import (
    Embedding,
    LabeledRootedGraph,
    QuasiOrder,
    check_embedding,
    find_embedding,
    good_pair_scan,
    multiset_dominates,
)
from .families import (
    FamilySpec,
    cycle_graph,
    dipole,
    disjoint_union,
    generate,
    star_path_decomposition,
    path_graph,
    random_pm_free,
    robertson_chain,
    star_graph,
)
from .multigraph import (
    MengerCertificate,
    Multigraph,
    PathWitness,
    check_path_witness,
    connected_components,
    contains_path,
    disjoint_paths,
    induced_subgraph,
    longest_path_length,
    longest_path_witness,
    menger_value,
)
from .oracle import (
    DecompositionSpace,
    OracleLimitError,
    brute_tree_diameter,
    brute_treewidth,
    enumerate_multigraphs,
    enumerate_pm_free,
    find_short_linked_minwidth,
    reduce_decomposition,
)
from .shorten import (
    RewirePlan,
    RotundCertificate,
    dedupe_bags,
    diameter_bound,
    plan_for_set,
    reduce_for_set,
    rotund_max,
    shorten_pass,
)

__version__ = "0.1.0"

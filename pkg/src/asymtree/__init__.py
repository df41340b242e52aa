"""Asymmetric (automorphism-free) trees.

Canonical AHU codes, automorphism counting, the special-leaf procedure,
isomorphism-free enumeration, and machine verification that E7 is the
unique minimal element of the leaf-deletion poset.
"""

from asymtree.canon import (
    Automorphism,
    AutCount,
    CanonicalCode,
    are_isomorphic,
    aut_order,
    brute_force_automorphisms,
    canonical_code,
    is_asymmetric,
    rooted_code,
)
from asymtree.e7 import E7_EDGES, e7_code, e7_tree
from asymtree.enumeration import (
    CountRow,
    EnumerationStream,
    all_trees,
    asymmetric_trees,
    count_report,
)
from asymtree.errors import AsymtreeError
from asymtree.kernel import BACKEND
from asymtree.poset import (
    CoverEdge,
    PosetLevel,
    ReductionTrace,
    VerifyReport,
    build_hasse,
    chain_from_e7,
    minimal_elements,
    reduce_to_e7,
    safe_leaves,
    verify_poset,
)
from asymtree.specialleaf import (
    SpecialLeafCertificate,
    check_special_leaf,
    find_special_leaf,
    is_special_leaf,
)
from asymtree.tree import (
    CenterInfo,
    Leaf,
    Tree,
    add_leaf,
    build_tree,
    center_info,
    components_after_removal,
    delete_leaf,
    distance,
    leaves,
    relabel,
)

__version__ = "0.1.0"

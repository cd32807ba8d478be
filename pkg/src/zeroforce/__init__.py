"""Zero forcing sets, exact zero forcing numbers, and girth/degree lower bounds."""

from .bounds import (
    delta_p,
    girth_degree_bound,
    growth_check,
    lemma2_holds,
    lemma2_scan,
    moore_check,
)
from .forcing import ForcingSchedule, closure, is_zero_forcing_set, verify_schedule, zero_forcing_number
from .formats import encode_graph6, parse_edge_list, parse_graph6
from .graph import (
    Acyclic,
    Graph,
    components,
    contract_to_bipartite,
    girth,
    mask_of,
    members,
    min_degree,
    neighborhood,
)
from .proof import (
    build_decomposition,
    check_counting_chain,
    check_hprime_girth,
    check_moore_contradiction_branch,
    check_pairwise_caps,
)

__version__ = "0.1.0"

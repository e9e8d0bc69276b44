"""Stream file I/O, CLI, generators, oracles and the invariant checker."""

from .cli import main, run_cli
from .generators import (edges_to_stream, gen_disjointness_gadget,
                         gen_index_gadget, gen_promised_stream,
                         gen_random_stream)
from .invariants import check_invariants
from .oracles import (BudgetExceeded, oracle_fvs, oracle_min_fvs,
                      oracle_min_vc, oracle_vc)
from .streams import (MODES, QUERY, ParseError, StreamFile, emit_stream,
                      parse_stream)

__all__ = [
    "main", "run_cli",
    "edges_to_stream", "gen_disjointness_gadget", "gen_index_gadget",
    "gen_promised_stream", "gen_random_stream",
    "check_invariants",
    "BudgetExceeded", "oracle_fvs", "oracle_min_fvs", "oracle_min_vc",
    "oracle_vc",
    "MODES", "QUERY", "ParseError", "StreamFile", "emit_stream",
    "parse_stream",
]

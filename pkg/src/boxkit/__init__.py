"""Split interval witnesses for boxicity versus chromatic number."""

from .graph import Graph, complement, generate, induced, is_cycle_graph, new_graph, non_edges
from .coloring import ColorClasses, chromatic_number, greedy_coloring, independence_number, verify_coloring
from .recognition import (
    ATriple,
    SplitPartition,
    asteroidal_triples,
    is_chordal,
    is_interval,
    is_split,
    nested_neighborhood_premise,
)
from .witness import (
    SplitIntervalFamily,
    WitnessFamily,
    build_family,
    build_h,
    from_neighborhoods,
    validate_witness,
)
from .circulant import at_witness, coloring_41, coloring_42, gen_circulant, witness_41, witness_42
from .realization import (
    BoxRepresentation,
    IntervalRealization,
    assemble_boxes,
    realize_chain_split,
    realize_interval,
    verify_boxes,
    verify_realization,
)
from .oracle import boxicity_exact, crown_search, interval_completions

__version__ = "0.1.0"

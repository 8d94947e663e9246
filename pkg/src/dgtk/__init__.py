"""Algorithms for locally semicomplete digraphs and their subclasses.

Recognition of the digraph classes built from local neighbourhood
conditions, construction and verification of round/in-round/out-round
cyclic orders, maximal hub decompositions with their quotients, acyclic
2-colouring constructions with an exact brute-force oracle, minimum
out-degree bounds under girth constraints, 2-king location, and the hero
grammar for tournaments.  Everything works on immutable Digraph values
with dense integer vertices and is deterministic.
"""

from dgtk.applications import (
    WeightedQuotient,
    ch_low_outdegree_vertex,
    find_2king,
    is_2king,
    select_low_outflow_part,
)
from dgtk.colouring import (
    Colouring,
    dichromatic_number,
    dicolour_in_round,
    dicolour_locally_tournament,
    dicolour_out_transitive,
    is_valid_dicolouring,
    minimum_dicolouring,
)
from dgtk.decomposition import (
    FourPartition,
    HubPartition,
    LscStructure,
    RoundBlowup,
    UniversalSemicomplete,
    WeakHub,
    boundary_sets,
    decompose_lsc,
    find_weak_hubs,
    maximal_hubs,
)
from dgtk.digraph import (
    CyclicOrder,
    Digraph,
    Partition,
    contract,
    directed_cycle,
    girth,
    induced_subdigraph,
    is_acyclic,
    is_strong,
    reverse,
    shortest_cycle,
    strong_components,
    topological_order,
    transitive_tournament,
    underlying_connected,
)
from dgtk.dtf import DtfParseError, parse_dtf, write_dtf
from dgtk.errors import InternalCheckError, PreconditionError, UnsupportedSizeError
from dgtk.generators import (
    GENERATOR_CLASSES,
    GenerationError,
    GeneratorSpec,
    enumerate_all,
    generate,
)
from dgtk.orders import (
    ORDER_KINDS,
    OrderSearchFailure,
    find_in_round_order,
    find_out_round_order,
    find_round_order,
    verify_order,
)
from dgtk.recognition import (
    CLASSES,
    DominationChain,
    SingleVertex,
    TriangleComposition,
    Witness,
    check_class,
    find_forbidden_witness,
    is_hero,
)

__version__ = "0.1.0"

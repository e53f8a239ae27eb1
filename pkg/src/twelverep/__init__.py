"""Shortest 12-representants of labeled graphs, with brute-force oracles."""

from twelverep.errors import (
    AlphabetMismatch,
    BudgetExceeded,
    IncompleteAlphabet,
    InvalidGraph,
    InvalidSelection,
    LetterOutOfRange,
    NotRepresentable,
    ParseError,
    PreconditionViolated,
    TooManyOccurrences,
    TwelveRepError,
)
from twelverep.graph import (
    BadVertexReport,
    InducedSubgraph,
    LabeledGraph,
    PatternKind,
    PatternWitness,
    bad_vertices,
    find_forbidden_pattern,
    graph_from_json,
    induced_subgraph,
    length_lower_bound,
    new_labeled_graph,
    reduced_form,
)
from twelverep.oracle import (
    LabelingResult,
    SearchBudget,
    brute_force_shortest,
    enumerate_labeled_graphs,
    is_permutation_representable,
    is_representable,
    min_bad_labeling,
)
from twelverep.shortener import (
    ShortenStep,
    ShortenTrace,
    TraceLevel,
    apply_rewrite_a,
    apply_rewrite_b,
    apply_rewrite_c,
    shorten,
    shorten_with_trace,
)
from twelverep.words import Word, decode, format_word, occurrence_index, parse_word, verify

__version__ = "0.1.0"

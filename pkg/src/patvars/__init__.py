"""patvars: matching patterns with variables.

Patterns mix terminal letters with variables that must be uniformly
replaced by terminal words.  The package computes the structural parameters
(scope coincidence degree, locality, nesting classes) that make restricted
patterns efficiently matchable, implements the corresponding matchers plus
a complete brute-force reference, enumerates maximal gapped repeats and
palindromes, bridges word locality with graph cutwidth, and solves
restricted word equations.
"""

from .core import (
    EMPTY_WORD,
    ERASING,
    NON_ERASING,
    OneVarBlock,
    OneVarBlockDecomposition,
    Pattern,
    Substitution,
    Variable,
    Word,
    apply_substitution,
    one_variable_blocks,
    parse_pattern,
    parse_word,
    period,
    primitive_root,
    scopes,
    skeleton,
)
from .equations import (
    Equation,
    EquationClassReport,
    OneVarVerdict,
    classify_equation,
    parse_equation,
    solve_bounded,
    solve_one_variable,
)
from .errors import (
    AlphabetTooLargeError,
    GraphError,
    InvalidMarkingError,
    NoVariablesError,
    ParameterTooLargeError,
    PatternSyntaxError,
    PatvarsError,
    SubstitutionError,
    WrongClassError,
)
from .gapped import (
    GappedOccurrence,
    find_maximal_gapped_palindromes,
    find_maximal_gapped_repeats,
)
from .graphs import (
    LinearArrangement,
    Multigraph,
    PatternGraph,
    cutwidth_exact,
    graph_to_words,
    parse_graph_file,
    render_graph_file,
    standard_graph,
    word_to_graph,
)
from .matching import (
    MatchOptions,
    MatchResult,
    MatchStats,
    OccurrenceList,
    find_one_variable_occurrences,
    match,
    match_brute,
    match_k_local,
    match_non_cross,
    match_regular,
    match_repetition,
    match_repvar,
    match_scd,
)
from .structure import (
    ClassFlags,
    ClassReport,
    class_flags,
    classify,
    is_k_local,
    locality_number,
    marking_number,
    repeated_variables,
    scope_coincidence_degree,
)

__version__ = "0.1.0"

"""Algorithms for graph products of groups.

Construct a `GroupSpec` (a simplicial graph plus one group per vertex) and
the rest of the package speaks words over it: graphical reduction and
canonical forms for the word problem, constructive cyclic reduction and
certified witnesses for conjugacy, Dehn function classification, disc and
annular diagrams with dual curves and elementary moves, and brute-force
oracles the fast paths are tested against.
"""

from .conjugacy import (
    ConjugacyWitness,
    CyclicReduction,
    FloatingDecomposition,
    are_conjugate,
    clf_upper_bound,
    cyclic_shuffle_class,
    cyclically_reduce,
    floating_decomposition,
    is_graphically_cyclically_reduced,
    verify_witness,
)
from .diagrams import (
    Dart,
    Diagram,
    DualCurve,
    MOVES,
    apply_move,
    boundary_label,
    check_curve_laws,
    diagram_to_data,
    dual_curves,
    empty_diagram,
    load_diagram,
    parse_diagram,
    save_diagram,
    shuffle_diagram,
    stack_diagram,
    validate_diagram,
)
from .errors import (
    BadFaceSize,
    BadSquareRelator,
    BadTriangleRelator,
    BfsLimitExceeded,
    CapExceeded,
    DuplicateVertex,
    ForeignElement,
    GeneratorsDoNotGenerate,
    GraphProductError,
    IdentityEdgeLabel,
    IllegalSwap,
    NotAGroup,
    NotCyclicallyReduced,
    NotPlanar,
    PatternMismatch,
    SelfLoop,
    TrivialGroup,
    UnknownElement,
    UnknownEndpoint,
    UnknownVertex,
    UnsupportedKind,
    WordSyntaxError,
    WrongBoundaryCount,
)
from .graph import (
    DehnClass,
    SimplicialGraph,
    dehn_class,
    enumerate_cliques,
    meier_condition,
    opposite_diameter,
    subnegative_closure,
    validate_graph,
)
from .groups import (
    CyclicGroup,
    IntegersGroup,
    TableGroup,
    VertexGroup,
    validate_group,
)
from .oracle import (
    CayleyBall,
    empirical_clf,
    oracle_conjugate,
    oracle_equal,
    rewrite_closure,
    word_letters,
)
from .specfile import (
    GroupSpec,
    load_spec,
    parse_spec,
    save_spec,
    spec_to_data,
)
from .words import (
    NormalForm,
    Syllable,
    Word,
    canonical_form,
    check_word,
    equal,
    format_word,
    invert_word,
    is_graphically_reduced,
    parse_word,
    reduce,
    word_length,
)

__version__ = "0.1.0"

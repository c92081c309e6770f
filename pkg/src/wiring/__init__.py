"""Wiring diagrams as an operad, with a relational query semantics.

Core layers: :mod:`wiring.stars` (cospans and composition),
:mod:`wiring.typed` (value domains), :mod:`wiring.relations` (conjunctive
evaluation), :mod:`wiring.partitions` (equivalence relations),
:mod:`wiring.closed` (currying), :mod:`wiring.recursion` (fixed points),
:mod:`wiring.dsl` / :mod:`wiring.query` / :mod:`wiring.cli` (the script
front end), and :mod:`wiring.laws` (random law checks).
"""

from .errors import (
    BudgetExceededError,
    CsvFormatError,
    EnumerationLimitError,
    InterfaceError,
    ScriptError,
    TypeMismatchError,
    ValidationError,
    WiringError,
)
from .stars import (
    Star,
    WiringDiagram,
    canonicalize,
    compose,
    diagrams_equal,
    identity_diagram,
    reindex_inner,
)
from .typed import (
    TypedStar,
    TypedWiringDiagram,
    ValueDomain,
    canonicalize_typed,
    forget_types,
    lift_uniform,
    typed_compose,
    typed_diagrams_equal,
    typed_identity,
)
from .relations import Relation, evaluate, evaluate_naive, union
from .partitions import Partition
from .closed import (
    HomStar,
    apply_hom,
    evaluation_diagram,
    externalize,
    internal_hom,
    internalize,
)
from .recursion import (
    FactorialFixture,
    FixedPointResult,
    RecursiveSetup,
    build_setup,
    factorial_fixture,
    fixed_point,
    is_fixed_point,
    setup_from_relation,
    step,
)
from .laws import GeneratorConfig, SuiteReport, is_connected

__version__ = "0.1.0"

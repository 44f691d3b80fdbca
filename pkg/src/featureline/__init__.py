"""Color-coded feature models and product-line configuration.

Feature models are box trees whose shared labels form a feature DAG;
products are configured step by step with transactional decision
propagation, and a 150% asset library filters down to each product's
100% list through Boolean variation criteria.
"""

from .assets import ALWAYS, Asset, AssetKind, Catalog, FilterResult, bind_catalog, \
    filter_complete, filter_partial
from .engine import Action, BoxState, ConfigState, Decision, LookaheadReport, \
    Move, PropagationReport, Rule, assignment_of, decide, decide_label, \
    initial_state, is_complete, lookahead, open_count, undo
from .errors import (
    CapExceededError,
    CatalogError,
    CompileError,
    DnfSizeError,
    FeatureLineError,
    FormulaSyntaxError,
    InvalidDecisionError,
    ModelSyntaxError,
    ModelValidationError,
    NothingToUndoError,
    ReplayDivergenceError,
    StateModelMismatchError,
    UnknownLabelError,
    VoidModelError,
)
from .files import export_config, export_dot, import_config, parse_model, \
    serialize_model
from .formula import And, Atom, Const, FALSE, Formula, Iff, Implies, Not, Or, \
    TRUE, TriValue, UnknownPolicy, atoms, evaluate, evaluate3, format_formula, \
    parse_formula, to_dnf, to_nnf
from .gadgets import ConstraintDecl, Excludes, FormulaConstraint, FreshLabels, \
    Requires, compile_all, compile_excludes, compile_formula, compile_requires, \
    encode_formula
from .model import Box, ColorView, FeatureModel, Group, ModelBuilder, \
    StateColor, StructuralColor, Violation, fingerprint, render_colors, \
    shared_label_groups, structural_color, validate_model
from .oracle import CycleReport, SolutionSet, count_configurations, dead_features, \
    detect_cycles, enumerate_configurations, enumerate_reference, false_optional, \
    validate_complete

__version__ = "0.1.0"

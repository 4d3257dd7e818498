"""Model checker for epistemic logics with skill updates."""

from ._core import (
    CapExceededError,
    ConflictError,
    Error,
    FormatError,
    Formula,
    FormulaError,
    LimitError,
    Model,
    RootedGraph,
    SyntaxError,
    UnknownWorldError,
    common_oracle,
    de_dicto,
    demo_model,
    explicit_de_re,
    formula_length,
    fragment,
    holds,
    implicit_de_re,
    induced_formula,
    induced_model,
    load_graph,
    load_model,
    load_model_file,
    parse_formula,
    reduction_check,
    render_formula,
    save_model,
    truth_set,
    ueg_winner,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Exact decomposition of finite-dimensional coalgebras and comodules."""

from __future__ import annotations

from .builders import (
    QuiverSpec,
    corpus_coalgebras,
    corpus_comodules,
    direct_sum_coalgebras,
    direct_sum_comodules,
    grouplike,
    matrix_coalgebra,
    path_coalgebra,
    randomized_basis,
    regular_comodule,
    standard_matrix_comodule,
)
from .coalgebra import Coalgebra, check_coalgebra, wedge, wedge_tower
from .comodule import (
    Comodule,
    ann_dual,
    ann_module,
    check_comodule,
    closure,
    coefficient_coalgebra,
    component,
    comodule_wedge,
    is_weak_closed,
    minimal_closed_subcomodules,
    socle,
)
from .config import (
    AnalysisConfig,
    AnalysisRefusal,
    ConsistencyError,
    InputError,
    NonSplitError,
    UnsupportedFieldError,
    use_config,
)
from .decomp import (
    classify,
    decompose_coalgebra,
    decompose_comodule,
    link_classes_coalgebra,
    link_classes_comodule,
    verify_structure,
)
from .exactla import GF, QQ, Field, Subspace
from .radical import coradical, jacobson_radical, simple_subcoalgebras

__version__ = "0.1.0"

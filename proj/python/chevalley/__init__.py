"""Chevalley bases and Chevalley groups from a Cartan matrix."""

from ._core import (
    ChevalleyBasis,
    ChevalleyError,
    RootSystem,
    adjoint_matrix,
    chevalley_basis,
    g2_table,
    group_order,
    lie_algebra_dimension,
    model_basis,
    order_formula,
    root_vector,
    structure_constants,
    verify,
)

__all__ = [
    "ChevalleyBasis",
    "ChevalleyError",
    "RootSystem",
    "adjoint_matrix",
    "chevalley_basis",
    "g2_table",
    "group_order",
    "lie_algebra_dimension",
    "model_basis",
    "order_formula",
    "root_vector",
    "structure_constants",
    "verify",
]

__version__ = "1.0.0"

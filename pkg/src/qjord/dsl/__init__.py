"""The .qalg presentation language and the built-in catalog."""

from qjord.dsl.builtins import QALG_FILES, builtin, builtin_names, builtin_text
from qjord.dsl.expr import AlgebraPresentation, Expr, Relation
from qjord.dsl.parser import parse, parse_expression
from qjord.dsl.serializer import render, serialize

__all__ = [
    "QALG_FILES",
    "AlgebraPresentation",
    "Expr",
    "Relation",
    "builtin",
    "builtin_names",
    "builtin_text",
    "parse",
    "parse_expression",
    "render",
    "serialize",
]

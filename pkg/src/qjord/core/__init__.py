"""Exact scalars, graded matrices and nilpotent series."""

from qjord.core.errors import QjordError
from qjord.core.matrix import (
    GradedMatrix,
    block_matrix,
    embed_legs,
    graded_flip,
    graded_kron,
    kron_parity,
    plain_kron,
    relabel_legs,
    super_bracket,
)
from qjord.core.scalars import (
    Scalar,
    ScalarContext,
    format_scalar,
    is_s_free,
    limit_q1,
    qnumber,
)
from qjord.core.series import SERIES, SeriesDef, nil_apply, nil_exp, nil_log, nil_power

__all__ = [
    "SERIES",
    "GradedMatrix",
    "QjordError",
    "Scalar",
    "ScalarContext",
    "SeriesDef",
    "block_matrix",
    "embed_legs",
    "format_scalar",
    "graded_flip",
    "graded_kron",
    "is_s_free",
    "kron_parity",
    "limit_q1",
    "nil_apply",
    "nil_exp",
    "nil_log",
    "nil_power",
    "plain_kron",
    "qnumber",
    "relabel_legs",
    "super_bracket",
]

"""qblocks: exact q-combinatorics of Dyck tilings and U_q(sl2) block vectors.

Subpackages by concern:

* :mod:`qblocks.qfield`  -- exact arithmetic in Q[q, q^-1] and Q(q),
  q-integers, numeric specialization at q = exp(4*pi*i/kappa);
* :mod:`qblocks.dyck`    -- Dyck paths, canonical order, wedges and slopes;
* :mod:`qblocks.tilings` -- Dyck tiles, nested and cover-inclusive tilings;
* :mod:`qblocks.qmatrix` -- weighted incidence matrices over Q(q), their
  inverses and the wedge-removal recursion;
* :mod:`qblocks.uqsl2`   -- U_q(sl2) acting on tensor powers of its
  two-dimensional irreducible, singlet projections, block vectors;
* :mod:`qblocks.blocks`  -- floating-point four-point block functions,
  their ODEs and diagonal asymptotics;
* :mod:`qblocks.cli`     -- the ``qblocks`` command-line front end.
"""

from qblocks.qfield import (
    LaurentPoly,
    PoleEvaluationError,
    QNumeric,
    RatQ,
    RatQDivisionError,
    eval_at_kappa,
    q_integer,
    q_ratio,
)
from qblocks.dyck import DyckPath, Shape, enumerate_paths, local_shape, parse_path, path_leq

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "RatQ",
    "QNumeric",
    "RatQDivisionError",
    "PoleEvaluationError",
    "q_integer",
    "q_ratio",
    "eval_at_kappa",
    "DyckPath",
    "Shape",
    "enumerate_paths",
    "local_shape",
    "parse_path",
    "path_leq",
    "__version__",
]

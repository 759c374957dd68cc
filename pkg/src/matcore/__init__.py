"""Dense linear algebra kernel."""

from .linalg import (
    Mat,
    Vec,
    as_matrix,
    as_vector,
    eig_2x2,
    kron,
    lambda_max_sym,
    max_singular,
    spd_inv_sqrt,
    spd_sqrt,
    sym_eig,
)

__all__ = [
    "Mat",
    "Vec",
    "as_matrix",
    "as_vector",
    "eig_2x2",
    "kron",
    "lambda_max_sym",
    "max_singular",
    "spd_inv_sqrt",
    "spd_sqrt",
    "sym_eig",
]

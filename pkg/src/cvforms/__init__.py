"""Exact arithmetic for confluent Vandermonde forms.

A form ``[n_1 ... n_N]`` is the determinant whose (i, j) entry is
``t_j**(n_j - i + 1) / (n_j - i + 1)!``, the j-th column holding the
(N - 1 - n_j)-fold derivative of the Vandermonde column in ``t_j``.
The package evaluates these determinants exactly, expands them into
signed row-blocks, classifies them by type and class, builds the ribbon
tableau bases of the harmonic subspaces, and checks the counting and
independence facts behind that construction.
"""

from .basis import (
    Basis,
    BasisForm,
    CoefficientMatrix,
    coefficient_matrix,
    compare_bases,
    fraction_free_rank,
    generate_basis,
    leading_rank,
    q_factorial,
    verify_characteristic_uniqueness,
    verify_harmonicity,
    verify_independence,
)
from .cvform import CvForm, permutation_sign, valid_class
from .laplace import (
    BlockFactorization,
    DecodingTable,
    RowBlock,
    build_decoding_table,
    characteristic_monomial,
    compare_rowblocks,
    derivative_oracle,
    diagonal_rowblock,
    evaluate,
    expand_rowblocks,
    leading_rowblock,
    naive_oracle,
    rowblock_value,
    shuffles,
)
from .poly import Polynomial
from .ribbon import (
    Ribbon,
    SkewPartition,
    SkewTableau,
    backward_order,
    class_to_ribbon,
    count_syt,
    enumerate_ribbons,
    enumerate_tableaux,
    flip,
    render_ribbon,
    render_tableau,
    ribbon_from_steps,
    ribbon_generating_function,
    ribbon_index,
    ribbon_to_class,
    ribbons_of_degree,
    tableau_from_cvform,
    tableau_to_cvform,
    tableau_to_type,
    to_skew_partition,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BasisForm",
    "BlockFactorization",
    "CoefficientMatrix",
    "CvForm",
    "DecodingTable",
    "Polynomial",
    "Ribbon",
    "RowBlock",
    "SkewPartition",
    "SkewTableau",
    "backward_order",
    "build_decoding_table",
    "characteristic_monomial",
    "class_to_ribbon",
    "coefficient_matrix",
    "compare_bases",
    "compare_rowblocks",
    "count_syt",
    "derivative_oracle",
    "diagonal_rowblock",
    "enumerate_ribbons",
    "enumerate_tableaux",
    "evaluate",
    "expand_rowblocks",
    "flip",
    "fraction_free_rank",
    "generate_basis",
    "leading_rank",
    "leading_rowblock",
    "naive_oracle",
    "permutation_sign",
    "q_factorial",
    "render_ribbon",
    "render_tableau",
    "ribbon_from_steps",
    "ribbon_generating_function",
    "ribbon_index",
    "ribbon_to_class",
    "ribbons_of_degree",
    "rowblock_value",
    "shuffles",
    "tableau_from_cvform",
    "tableau_to_cvform",
    "tableau_to_type",
    "to_skew_partition",
    "valid_class",
    "verify_characteristic_uniqueness",
    "verify_harmonicity",
    "verify_independence",
]

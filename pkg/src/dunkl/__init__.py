"""Exact operator algebra for the rank-one Dunkl setting and its divided powers.

The package is organized around one exact polynomial tower (``poly``), the
integer-valued polynomial lattices of the graded slices (``lattices``), the
operator normal-form engine (``operators``), the parity-free Weyl factor
(``weyl``), the intrinsic membership construction on the shifted module
(``membership``), the spherical sl2 picture (``sl2``), a small expression
grammar (``words``), exact JSON encodings (``serialize``) and the invariant
suite (``verification``).  Everything is exact rational arithmetic; nothing
is floating point.
"""

from .lattices import (
    SYMBOLIC,
    DunklMode,
    IntLattice,
    divisor_of_values,
    dunkl_poly,
    int_basis,
    l_poly,
    m_delta,
    saturate,
)
from .membership import (
    LogValue,
    OutOfModule,
    ShiftedModuleElement,
    act_on_shifted,
    equivalence_report,
    four_component_split,
    in_Hc,
    log_act,
)
from .operators import (
    DpWitness,
    GradedOp,
    Operator,
    basis_enumerate,
    compose,
    d_op,
    decompose_in_basis,
    delta_basis,
    dp_membership,
    e_minus,
    e_plus,
    from_text,
    from_word,
    grade_decompose,
    graded_dimension,
    in_dp,
    operator_divisor,
    partial_op,
    preserves_polynomials,
    reduce_mod_p,
    s_op,
    x_op,
)
from .poly import (
    ActionPoly,
    CoefPoly,
    ExactScalar,
    binomial_poly,
    falling_product,
    from_newton,
    integer_content,
    to_newton,
)
from .sl2 import Sl2Triple, build_triple, casimir, casimir_scalar, sigma, spherical_basis
from .weyl import WeylOp, hasse, tensor_divisor_check, weyl_compose, weyl_dp_basis
from .words import ParseError, parse, print_word

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

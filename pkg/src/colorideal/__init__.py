"""Groebner-basis tests for k-colorability and unique k-colorability."""

from .field import GF, QQ, FieldConfig, FieldError, Scalar, parse_field, validate_field
from .poly import (ALL_ORDERS, DEGLEX_ORDER, DEGREVLEX_ORDER, LEX_ORDER, Polynomial,
                   TermOrder, compare_monomials, complete_homogeneous, parse_polynomial)
from .groebner import (GroebnerBasis, NotZeroDimensionalError, buchberger, normal_form,
                       quotient_dimension, reduce_basis, standard_monomials)
from .ideal import Ideal, colon, contains, ideals_equal, intersect
from .graph import (ColorPartition, Graph, complete_graph, cycle_graph, enumerate_colorings,
                    has_clique, parse_dimacs, parse_partition, path_graph, read_dimacs,
                    render_dimacs, xu_bound_edges)
from .coloring import (coloring_ideal, ideal_I_Gk, ideal_I_nk, ideal_J_nk, nu_basis,
                       recognize_nu_shape)
from .algorithms import (ColorMethod, UniqueMethod, Verdict, decompose, is_k_colorable,
                         is_uniquely_k_colorable)

__version__ = "0.1.0"

"""Oriented arithmetic matroids: axioms, GP compatibility, minors, orientation
search and uniqueness, and realization by integer matrices."""

from .arithmetic import (ArithmeticMatroid, Multiplicity, RhoSign, check_divisibility,
                         check_molecule_axioms, gcd_property, m_contract, m_delete, m_dual, rho,
                         strong_gcd_extension, strong_gcd_property)
from .bundle import OrientedArithmeticMatroid, check_bundle, oam_contract, oam_delete, oam_dual
from .chirotope import (Chirotope, check_chirotope, check_gp, chi_contract, chi_delete, chi_dual,
                        chirotope_matroid, reorient)
from .gpfunction import GPFunction, PropagationError, chi_m, leibniz_rhs, propagate_from_bg1
from .matroid import (Matroid, MatroidError, basis_graph, check_basis_exchange, closure, contract,
                      coordinatizing_forest, delete, dual, fundamental_circuit_graph, is_molecule,
                      rank)
from .realization import (IntegerMatrix, IntegerRepresentation, RationalRealization,
                          integer_representation, matrix_to_oam, rational_realization,
                          verify_representation)
from .search import (Reorientation, canonicalize, enumerate_orientations, equivalent_orientations,
                     find_orientation)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Petit algebras S_f = K[t;sigma]/K[t;sigma]f: arithmetic, structure, automorphisms, isomorphisms."""
from .errors import (ConsistencyError, ParseError, PetitError, PreconditionError, ScaleError,
                     UnsupportedBackend)
from .field_tower import (FiniteExtension, QuadraticExtension, make_finite_extension,
                          make_quadratic_extension, parse_field_spec)
from .skew_poly import SkewPoly, parse_poly
from .petit_algebra import AlgebraElement, PetitAlgebra, Subspace
from .automorphism import (AutMap, GroupReport, enumerate_aut_formula, enumerate_aut_oracle,
                           extend_id_subgroup, inner_from_c, quaternion_subgroups, structure_report)
from .isomorphism import IsoWitness, classify, find_isomorphism, iso_oracle, norm_obstruction

__all__ = [
    "AlgebraElement", "AutMap", "ConsistencyError", "FiniteExtension", "GroupReport", "IsoWitness",
    "ParseError", "PetitAlgebra", "PetitError", "PreconditionError", "QuadraticExtension", "ScaleError",
    "SkewPoly", "Subspace", "UnsupportedBackend", "classify", "enumerate_aut_formula",
    "enumerate_aut_oracle", "extend_id_subgroup", "find_isomorphism", "inner_from_c", "iso_oracle",
    "make_finite_extension", "make_quadratic_extension", "norm_obstruction", "parse_field_spec",
    "parse_poly", "quaternion_subgroups", "structure_report",
]

"""Abelian crossed modules, strict Picard categories and extensions of type B -> D."""

from __future__ import annotations

__version__ = "0.1.0"

from .cochains import (Cochain3Pair, SymCochain1, SymCochain2, coboundary, coboundary2,
                       is_sym_2cocycle, is_sym_3cocycle, transport)
from .cohomology import (CohomologyGroup, class_of, is_cohomologous, oracle_check, oracle_enumerate,
                         sym_cohomology)
from .crossed import (AbCrossedModule, AbCrossMorphism, CrossedData, compose_morphism, crossed_data,
                      homotopy_groups, is_abelian, to_abelian, validate_crossed_data, validate_morphism)
from .errors import (AbCrossError, BaseMismatch, Check, DomainMismatch, IllDefinedHom, InvalidExtension,
                     InvalidFunctor, InvalidMorphism, InvalidTwisting, NotACocycle, NotMono,
                     NotNormalized, SizeExceeded)
from .extensions import (Classes, Extension, Obstructed, are_equivalent, canonical_extension,
                         classify_extensions, enumerate_extensions, extension_from_groups,
                         extension_of_functor, functor_of_extension, induced_psi, obstruction_class,
                         partition_by_equivalence, pullback_extension, total_group_type,
                         validate_extension)
from .groups import (ExactDecomposition, FinAbGroup, GroupHom, Z, compose_hom, exact_decomposition,
                     hom_new, homs, limit_max_order, solve_preimage)
from .picard import (DisFunctor, FunctorTypePair, ReducedPicard, ReducedSMFunctor, RegularSMFunctor,
                     StrictPicard, are_homotopic, base_of, compose_functors, dis, functor_classes,
                     functor_of_morphism, hom_set, is_realizable, morphism_of_functor, obstruction,
                     picard_of, reduce, reduced_homotopy, reduced_type, validate_dis_functor,
                     validate_functor, validate_reduced_functor)
from .snf import invariant_factors, smith_normal_form

__all__ = [
    "AbCrossedModule", "AbCrossError", "AbCrossMorphism", "are_equivalent", "are_homotopic",
    "base_of", "BaseMismatch", "canonical_extension", "Check", "class_of", "Classes",
    "classify_extensions", "coboundary", "coboundary2", "Cochain3Pair", "CohomologyGroup",
    "compose_functors", "compose_hom", "compose_morphism", "crossed_data", "CrossedData", "dis",
    "DisFunctor", "DomainMismatch", "enumerate_extensions", "exact_decomposition",
    "ExactDecomposition", "Extension", "extension_from_groups", "extension_of_functor",
    "FinAbGroup", "functor_classes", "functor_of_extension", "functor_of_morphism",
    "FunctorTypePair", "GroupHom", "hom_new", "hom_set", "homotopy_groups", "homs",
    "IllDefinedHom", "induced_psi", "InvalidExtension", "InvalidFunctor", "InvalidMorphism",
    "InvalidTwisting", "invariant_factors", "is_abelian", "is_cohomologous", "is_realizable",
    "is_sym_2cocycle", "is_sym_3cocycle", "limit_max_order", "morphism_of_functor", "NotACocycle",
    "NotMono", "NotNormalized", "Obstructed", "obstruction", "obstruction_class", "oracle_check",
    "oracle_enumerate", "partition_by_equivalence", "picard_of", "pullback_extension", "reduce",
    "reduced_homotopy", "reduced_type", "ReducedPicard", "ReducedSMFunctor", "RegularSMFunctor",
    "SizeExceeded", "smith_normal_form", "solve_preimage", "StrictPicard", "sym_cohomology",
    "SymCochain1", "SymCochain2", "to_abelian", "total_group_type", "transport",
    "validate_crossed_data", "validate_dis_functor", "validate_extension", "validate_functor",
    "validate_morphism", "validate_reduced_functor", "Z",
    "__version__",
]

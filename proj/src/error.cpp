#include "ordrel/error.hpp"

namespace ordrel {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_element: return "DuplicateElement";
    case errc::unknown_element: return "UnknownElement";
    case errc::antisymmetry_violation: return "AntisymmetryViolation";
    case errc::not_monotone: return "NotMonotone";
    case errc::composition_mismatch: return "CompositionMismatch";
    case errc::not_adjoint: return "NotAdjoint";
    case errc::not_weakening_closed: return "NotWeakeningClosed";
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_distributive: return "NotDistributive";
    case errc::empty_lattice: return "EmptyLattice";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::not_an_embedding: return "NotAnEmbedding";
    case errc::not_a_dl_relation: return "NotADLRelation";
    case errc::not_complemented: return "NotComplemented";
    case errc::not_a_preorder: return "NotAPreorder";
    case errc::not_lax_commuting: return "NotLaxCommuting";
    case errc::type_mismatch: return "TypeMismatch";
    case errc::formulation_disagreement: return "FormulationDisagreement";
    case errc::iso_failure: return "IsoFailure";
    case errc::size_guard: return "SizeGuard";
    case errc::schema_error: return "SchemaError";
    case errc::unsupported_document: return "UnsupportedDocument";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

} // namespace ordrel

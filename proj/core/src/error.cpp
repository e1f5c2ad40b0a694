#include "versorlab/error.hpp"

namespace versorlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSignatureMismatch: return "signature_mismatch";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotABivector: return "not_a_unit_bivector";
    case ErrorCode::kNonUnitVersor: return "non_unit_versor";
    case ErrorCode::kClosureCapExceeded: return "closure_cap_exceeded";
    case ErrorCode::kUnknownCatalogName: return "unknown_catalog_name";
    case ErrorCode::kNotInGroup: return "not_in_group";
    case ErrorCode::kDegenerateAngle: return "degenerate_angle";
    case ErrorCode::kPointAtInfinity: return "point_at_infinity";
    case ErrorCode::kAxiomViolation: return "axiom_violation";
    case ErrorCode::kAmbiguousIrreps: return "ambiguous_irreps";
    case ErrorCode::kWitnessMismatch: return "witness_mismatch";
    case ErrorCode::kMcKayMismatch: return "mckay_mismatch";
    case ErrorCode::kUnidentified: return "unidentified_root_system";
    case ErrorCode::kParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace versorlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "versorlab/cga2d.hpp"
#include "versorlab/induction.hpp"
#include "versorlab/mckay.hpp"
#include "versorlab/root_system.hpp"
#include "versorlab/versor_group.hpp"

namespace versorlab {

// { "sig": [p,q], "coeffs": { "<blade>": value } }, coefficients at or below
// eps omitted.
nlohmann::json to_json(const Multivector& mv, double eps = kEpsilon);
Multivector multivector_from_json(const nlohmann::json& j);

// Root-system input: { "name": str?, "sig": [p,q], "simple_roots": [[...]] }.
struct RootSystemInput {
  std::optional<std::string> name;
  Signature sig;
  std::vector<Multivector> simple_roots;
};
RootSystemInput root_system_input_from_json(const nlohmann::json& j);

// Input fields plus "roots" (canonical order), "cartan" and "diagram"
// ([i, j, m] with 1-based node indices).
nlohmann::json to_json(const RootSystem& rs, double eps = kEpsilon);

// Group table: { "kind", "order", "classes": [ { "size", "order",
// "representative", "members": [...] } ] }. Pin/spin tables carry an
// "inverse_class" (0-based) per class.
nlohmann::json group_table_json(const VersorGroup& g,
                                const std::vector<ConjugacyClass>& classes);
nlohmann::json group_table_json(const QuotientGroup& q);

nlohmann::json to_json(const InducedRootSystem4D& induced,
                       const SymmetryReport& symmetries);

nlohmann::json to_json(const std::vector<McKayRow>& rows);

// { "input", "word", "versor_result", "oracle_result", "max_deviation" }.
nlohmann::json to_json(const cga::ModularComparison& cmp);

// Rounds magnitudes at or below eps to exactly zero.
double clean(double x, double eps = kEpsilon);

}  // namespace versorlab

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "versorlab/root_system.hpp"

namespace versorlab {

// Named root systems built by reflection closure from stored simple roots.
//
// Accepted names: A1..A7 (A3 uses simple roots in three dimensions, the
// others the usual embedding), A1^k for k = 1..8, B2..B8, D4..D8, E6, E7, E8,
// F4, G2, H2, H3, H4 and I2(n) for 3 <= n <= 1000. Throws
// kUnknownCatalogName for anything else.
RootSystem catalog(std::string_view name, const RootClosureOptions& options = {});

// Unclosed simple roots of a catalog entry, in diagram order.
std::vector<Multivector> catalog_simple_roots(std::string_view name);

// The names exercised by the McKay table and the 4D induction.
std::vector<std::string> core_catalog_names();

// Golden ratio (1 + sqrt 5)/2 = 2 cos(pi/5).
inline constexpr double kGoldenRatio = 1.6180339887498948482;

}  // namespace versorlab

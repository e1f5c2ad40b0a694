#include "versorlab/catalog.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "versorlab/error.hpp"

namespace versorlab {

namespace {

using Coords = std::vector<std::vector<double>>;

std::vector<Multivector> to_vectors(int dim, const Coords& rows) {
  const Signature sig(dim, 0);
  std::vector<Multivector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(Multivector::vector(sig, row));
  return out;
}

std::vector<double> unit(int dim, int i, double scale = 1.0) {
  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

// e_{i+1} - e_i style difference of coordinate axes: e_j - e_i.
std::vector<double> difference(int dim, int j, int i) {
  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  v[static_cast<std::size_t>(j)] += 1.0;
  v[static_cast<std::size_t>(i)] -= 1.0;
  return v;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(ErrorCode::kUnknownCatalogName,
              "unknown root system '" + std::string(name) + "'");
}

Coords dihedral(int n) {
  const double angle = std::numbers::pi - std::numbers::pi / n;
  return {{1.0, 0.0}, {std::cos(angle), std::sin(angle)}};
}

}  // namespace

std::vector<Multivector> catalog_simple_roots(std::string_view name) {
  const double s2 = std::sqrt(2.0);
  const double tau = kGoldenRatio;

  if (name == "A3") {
    // Pairwise-obtuse choice in three dimensions.
    return to_vectors(3, {{-1 / s2, 1 / s2, 0},
                          {0, -1 / s2, 1 / s2},
                          {1 / s2, 1 / s2, 0}});
  }
  if (name == "A2") return to_vectors(2, dihedral(3));
  if (name == "H2") return to_vectors(2, dihedral(5));
  if (name == "G2") {
    return to_vectors(2, {{1.0, 0.0}, {-1.5, std::sqrt(3.0) / 2}});
  }
  if (name == "H3") {
    return to_vectors(3, {{0, 1, 0},
                          {-(tau - 1) / 2, -tau / 2, -0.5},
                          {0, 0, 1}});
  }
  if (name == "H4") {
    return to_vectors(4, {{0, 1, 0, 0},
                          {-(tau - 1) / 2, -tau / 2, -0.5, 0},
                          {0, 0, 1, 0},
                          {tau / 2, 0, -0.5, (tau - 1) / 2}});
  }
  if (name == "F4") {
    return to_vectors(4, {{0, 1, -1, 0},
                          {0, 0, 1, -1},
                          {0, 0, 0, 1},
                          {0.5, -0.5, -0.5, -0.5}});
  }
  if (name == "E6" || name == "E7" || name == "E8") {
    Coords rows = {{0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5},
                   {1, 1, 0, 0, 0, 0, 0, 0}};
    const int count = name[1] - '0';
    for (int i = 0; i + 2 < count; ++i) rows.push_back(difference(8, i + 1, i));
    return to_vectors(8, rows);
  }
  if (name.starts_with("I2(") && name.ends_with(")")) {
    auto n = parse_int(name.substr(3, name.size() - 4));
    if (!n || *n < 3 || *n > 1000) unknown(name);
    return to_vectors(2, dihedral(*n));
  }
  if (name.starts_with("A1^")) {
    auto k = parse_int(name.substr(3));
    if (!k || *k < 1 || *k > 8) unknown(name);
    Coords rows;
    for (int i = 0; i < *k; ++i) rows.push_back(unit(*k, i));
    return to_vectors(*k, rows);
  }
  if (name.size() >= 2) {
    auto n = parse_int(name.substr(1));
    if (!n) unknown(name);
    switch (name[0]) {
      case 'A': {
        if (*n == 1) return to_vectors(1, {{1.0}});
        if (*n < 4 || *n > 7) unknown(name);
        Coords rows;
        for (int i = 0; i < *n; ++i) rows.push_back(difference(*n + 1, i + 1, i));
        return to_vectors(*n + 1, rows);
      }
      case 'B': {
        if (*n < 2 || *n > 8) unknown(name);
        Coords rows;
        for (int i = 0; i + 1 < *n; ++i) rows.push_back(difference(*n, i, i + 1));
        rows.push_back(unit(*n, *n - 1));
        return to_vectors(*n, rows);
      }
      case 'D': {
        if (*n < 4 || *n > 8) unknown(name);
        Coords rows;
        for (int i = 0; i + 1 < *n; ++i) rows.push_back(difference(*n, i, i + 1));
        std::vector<double> last(static_cast<std::size_t>(*n), 0.0);
        last[static_cast<std::size_t>(*n - 2)] = 1.0;
        last[static_cast<std::size_t>(*n - 1)] = 1.0;
        rows.push_back(last);
        return to_vectors(*n, rows);
      }
      default:
        break;
    }
  }
  unknown(name);
}

RootSystem catalog(std::string_view name, const RootClosureOptions& options) {
  RootSystem rs = close_roots(catalog_simple_roots(name), options);
  rs.name = std::string(name);
  return rs;
}

std::vector<std::string> core_catalog_names() {
  return {"A1",  "A1^3", "A3", "B3", "H3", "I2(5)", "A1^4", "D4",
          "F4",  "H4",   "E6", "E7", "E8"};
}

}  // namespace versorlab

#include "versorlab/mckay.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "versorlab/catalog.hpp"
#include "versorlab/error.hpp"
#include "versorlab/induction.hpp"

namespace versorlab {

int IrrepDims::sum() const { return std::accumulate(dims.begin(), dims.end(), 0); }

long IrrepDims::sum_of_squares() const {
  long s = 0;
  for (int d : dims) s += static_cast<long>(d) * d;
  return s;
}

namespace {

std::vector<Versor> commutators(const VersorGroup& g) {
  std::vector<Versor> out;
  KeyIndex seen(g.grid());
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) {
      Versor c = a * b * a.inverse() * b.inverse();
      if (seen.insert(c.mv(), out.size())) out.push_back(std::move(c));
    }
  }
  return out;
}

std::size_t subgroup_order(const VersorGroup& g, const std::vector<Versor>& generators) {
  GroupClosureOptions options;
  options.precision.grid = g.grid();
  return close_under_products(generators, options).size();
}

std::vector<int> unique_solution(std::size_t square_sum, std::size_t class_count,
                                 std::size_t linear_count, const std::string& what) {
  auto candidates = irrep_dimension_candidates(square_sum, class_count, linear_count);
  if (candidates.size() == 1) return std::move(candidates.front());
  std::string listing;
  for (const auto& c : candidates) {
    listing += " {";
    for (std::size_t i = 0; i < c.size(); ++i) {
      listing += (i ? "," : "") + std::to_string(c[i]);
    }
    listing += "}";
  }
  throw Error(ErrorCode::kAmbiguousIrreps,
              std::to_string(candidates.size()) + " dimension multisets fit " + what +
                  " (sum of squares " + std::to_string(square_sum) + ", " +
                  std::to_string(class_count) + " classes, " +
                  std::to_string(linear_count) + " ones):" + listing);
}

}  // namespace

std::size_t abelianization_order(const VersorGroup& g) {
  return g.order() / subgroup_order(g, commutators(g));
}

std::vector<std::vector<int>> irrep_dimension_candidates(std::size_t square_sum,
                                                         std::size_t class_count,
                                                         std::size_t linear_count) {
  std::vector<std::vector<int>> solutions;
  if (linear_count > class_count || linear_count > square_sum) return solutions;
  const std::size_t slots = class_count - linear_count;
  const long target = static_cast<long>(square_sum) - static_cast<long>(linear_count);
  std::vector<int> current(linear_count, 1);

  std::function<void(std::size_t, long, int)> search = [&](std::size_t left, long remaining,
                                                          int lowest) {
    if (left == 0) {
      if (remaining == 0) solutions.push_back(current);
      return;
    }
    for (int d = lowest;; ++d) {
      const long sq = static_cast<long>(d) * d;
      // Every later entry is at least d.
      if (sq * static_cast<long>(left) > remaining) break;
      current.push_back(d);
      search(left - 1, remaining - sq, d);
      current.pop_back();
    }
  };
  search(slots, target, 2);
  return solutions;
}

IrrepDims irrep_dimensions(const VersorGroup& g) {
  IrrepDims out;
  out.group_order = g.order();
  out.class_count = conjugacy_classes(g).size();
  const std::vector<Versor> derived = commutators(g);
  const std::size_t linear = g.order() / subgroup_order(g, derived);

  const Multivector minus_one = Multivector::scalar(g.signature(), -1.0);
  if (!g.contains(minus_one)) {
    out.dims = unique_solution(g.order(), out.class_count, linear, "the group");
    return out;
  }

  const QuotientGroup q = quotient_by_sign(g);
  std::vector<Versor> derived_and_sign = derived;
  derived_and_sign.push_back(Versor::from_multivector(minus_one));
  const std::size_t quotient_linear = g.order() / subgroup_order(g, derived_and_sign);
  const std::size_t half = g.order() / 2;

  out.quotient_dims =
      unique_solution(half, q.classes.size(), quotient_linear, "the sign quotient");
  out.spinorial_dims = unique_solution(half, out.class_count - q.classes.size(),
                                       linear - quotient_linear, "the spinorial irreps");
  out.dims = out.quotient_dims;
  out.dims.insert(out.dims.end(), out.spinorial_dims.begin(), out.spinorial_dims.end());
  std::sort(out.dims.begin(), out.dims.end());
  return out;
}

std::vector<McKayRow> mckay_table() {
  struct Spec {
    const char* three_d;
    const char* four_d;
    const char* lie;
    const char* affine;
  };
  static constexpr Spec kRows[] = {
      {"A1^3", "A1^4", "D4", "D4+"},
      {"A3", "D4", "E6", "E6+"},
      {"B3", "F4", "E7", "E7+"},
      {"H3", "H4", "E8", "E8+"},
  };
  std::vector<McKayRow> rows;
  for (const auto& spec : kRows) {
    const RootSystem rs = catalog(spec.three_d);
    const VersorGroup spin = generate_spin(rs);
    const InducedRootSystem4D induced = induce_4d(spin);
    McKayRow row;
    row.three_d = spec.three_d;
    row.four_d = induced.identification;
    row.lie = spec.lie;
    row.affine = spec.affine;
    row.phi_count = rs.size();
    row.irreps = irrep_dimensions(spin);
    row.sum_dims = row.irreps.sum();
    row.coxeter_h = coxeter_number(catalog(spec.lie));
    row.spin_order = spin.order();
    row.induced_roots = induced.base.size();
    if (row.four_d != spec.four_d ||
        row.phi_count != static_cast<std::size_t>(row.sum_dims) ||
        row.phi_count != row.coxeter_h) {
      throw Error(ErrorCode::kMcKayMismatch,
                  std::string("row ") + spec.three_d + ": |Phi| = " +
                      std::to_string(row.phi_count) + ", sum d = " +
                      std::to_string(row.sum_dims) + ", h(" + spec.lie +
                      ") = " + std::to_string(row.coxeter_h) + ", induced " +
                      row.four_d);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace versorlab

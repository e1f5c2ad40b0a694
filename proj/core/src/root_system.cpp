#include "versorlab/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "versorlab/blade_key.hpp"
#include "versorlab/error.hpp"
#include "versorlab/versor.hpp"

namespace versorlab {

namespace {

Multivector normalized(const Multivector& v, double eps) {
  const double n2 = dot(v, v);
  if (std::abs(n2) <= eps) {
    throw Error(ErrorCode::kInvalidArgument,
                "zero or null root " + to_string(v));
  }
  return v / std::sqrt(std::abs(n2));
}

// Gaussian elimination on coordinate rows.
bool linearly_independent(const std::vector<Multivector>& vs, double eps) {
  if (vs.empty()) return true;
  const std::size_t dim = static_cast<std::size_t>(vs.front().signature().dimension());
  if (vs.size() > dim) return false;
  std::vector<std::vector<double>> rows;
  for (const auto& v : vs) rows.push_back(v.vector_coords());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    }
    if (std::abs(rows[pivot][col]) <= eps) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const double f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank == rows.size();
}

void sort_canonically(std::vector<Multivector>& vs, double grid) {
  std::vector<std::pair<BladeKey, std::size_t>> keyed;
  keyed.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) keyed.emplace_back(BladeKey(vs[i], grid), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Multivector> out;
  out.reserve(vs.size());
  for (const auto& [key, i] : keyed) out.push_back(vs[i]);
  vs = std::move(out);
}

}  // namespace

RootSystem close_roots(const std::vector<Multivector>& simple_roots,
                       const RootClosureOptions& options) {
  if (simple_roots.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no simple roots given");
  }
  const Signature sig = simple_roots.front().signature();
  const double eps = options.precision.eps;
  for (const auto& a : simple_roots) {
    if (a.signature() != sig) {
      throw Error(ErrorCode::kSignatureMismatch,
                  "simple roots live in different algebras");
    }
    if (!is_homogeneous_grade(a, 1, eps) || is_zero(a, eps)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "simple root " + to_string(a) + " is not a nonzero vector");
    }
  }
  if (!linearly_independent(simple_roots, eps)) {
    throw Error(ErrorCode::kInvalidArgument,
                "simple roots are linearly dependent");
  }

  std::vector<Multivector> roots;
  KeyIndex index(options.precision.grid);
  auto add = [&](const Multivector& r) {
    if (index.insert(r, roots.size())) {
      roots.push_back(r);
      if (roots.size() > options.max_roots) {
        throw Error(ErrorCode::kClosureCapExceeded,
                    "root closure exceeded " + std::to_string(options.max_roots) +
                        " roots");
      }
    }
  };
  for (const auto& a : simple_roots) {
    const Multivector u = normalized(a, eps);
    add(u);
    add(-u);
  }

  // Fixed point: reflect every known root in every known root. Pairs where
  // both members were already handled in an earlier sweep are skipped.
  std::size_t settled = 0;
  for (std::size_t sweep = 0;; ++sweep) {
    if (sweep >= options.max_sweeps) {
      throw Error(ErrorCode::kClosureCapExceeded,
                  "root closure did not converge in " +
                      std::to_string(options.max_sweeps) + " sweeps");
    }
    const std::size_t known = roots.size();
    for (std::size_t i = 0; i < known; ++i) {
      for (std::size_t j = (i < settled ? settled : 0); j < known; ++j) {
        add(reflect(roots[j], roots[i], eps));
      }
    }
    if (roots.size() == known) break;
    settled = known;
  }

  sort_canonically(roots, options.precision.grid);
  RootSystem rs;
  rs.sig = sig;
  rs.roots = std::move(roots);
  rs.simple_roots = simple_roots;
  return rs;
}

AxiomReport check_axioms(const RootSystem& rs, const Precision& precision) {
  AxiomReport report;
  const double eps = precision.eps;
  KeyIndex index(precision.grid);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) index.insert(rs.roots[i], i);

  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    if (std::abs(std::abs(dot(rs.roots[i], rs.roots[i])) - 1.0) > eps) {
      report.unit_norm = false;
      report.detail = "root " + to_string(rs.roots[i]) + " is not a unit vector";
      break;
    }
  }

  auto fail_axiom1 = [&](std::size_t i, std::size_t j, std::string why) {
    report.axiom1 = false;
    if (!report.counterexample) {
      report.counterexample = std::pair{i, j};
      report.detail = std::move(why);
    }
  };
  for (std::size_t i = 0; i < rs.roots.size() && report.axiom1; ++i) {
    const Multivector& a = rs.roots[i];
    if (!index.contains(-a)) {
      fail_axiom1(i, i, "negative of " + to_string(a) + " missing");
      break;
    }
    const double aa = coefficient_norm(a) * coefficient_norm(a);
    for (std::size_t j = 0; j < rs.roots.size(); ++j) {
      if (j == i) continue;
      const Multivector& b = rs.roots[j];
      double ab = 0.0;
      for (BladeMask m = 0; m < a.blade_count(); ++m) ab += a[m] * b[m];
      const double c = ab / aa;
      if (coefficient_norm(b - a * c) <= eps * std::max(1.0, std::abs(c)) &&
          std::abs(c + 1.0) > eps) {
        fail_axiom1(i, j,
                    to_string(b) + " is a further scalar multiple of " +
                        to_string(a));
        break;
      }
    }
  }

  for (std::size_t i = 0; i < rs.roots.size() && report.axiom2; ++i) {
    for (std::size_t j = 0; j < rs.roots.size(); ++j) {
      const Multivector r = reflect(rs.roots[j], rs.roots[i], eps);
      if (!index.contains(r)) {
        report.axiom2 = false;
        if (!report.counterexample) {
          report.counterexample = std::pair{i, j};
          report.detail = "reflecting " + to_string(rs.roots[j]) + " in " +
                          to_string(rs.roots[i]) + " leaves the set";
        }
        break;
      }
    }
  }
  return report;
}

bool CartanMatrix::is_symmetric(double eps) const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > eps) return false;
    }
  }
  return true;
}

CartanMatrix cartan_matrix(const RootSystem& rs) {
  if (rs.simple_roots.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "root system has no simple roots");
  }
  CartanMatrix a;
  a.n = rs.simple_roots.size();
  a.entries.resize(a.n * a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      const auto& ai = rs.simple_roots[i];
      const auto& aj = rs.simple_roots[j];
      a.entries[i * a.n + j] = 2.0 * dot(ai, aj) / dot(aj, aj);
    }
  }
  return a;
}

std::vector<DiagramEdge> diagram(const RootSystem& rs, double angle_tolerance) {
  if (rs.simple_roots.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "root system has no simple roots");
  }
  std::vector<DiagramEdge> edges;
  const auto& s = rs.simple_roots;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double c = dot(s[i], s[j]) /
                       std::sqrt(std::abs(dot(s[i], s[i]) * dot(s[j], s[j])));
      if (std::abs(c) <= angle_tolerance) continue;
      // The link label comes from the complement of the (obtuse) angle.
      const double complement = std::acos(std::min(1.0, std::abs(c)));
      const double m = complement > 0.0 ? std::numbers::pi / complement : 1e300;
      const double rounded = std::round(m);
      if (rounded < 3.0 || rounded > 1000.0 ||
          std::abs(std::numbers::pi / rounded - complement) > angle_tolerance) {
        throw Error(ErrorCode::kDegenerateAngle,
                    "angle between simple roots " + std::to_string(i + 1) +
                        " and " + std::to_string(j + 1) +
                        " is not of the form pi/m");
      }
      edges.push_back({i, j, static_cast<int>(rounded)});
    }
  }
  return edges;
}

RootSystem make_root_system(Signature sig, std::vector<Multivector> roots,
                            std::vector<Multivector> simple_roots,
                            std::optional<std::string> name, double grid) {
  for (const auto& r : roots) {
    if (r.signature() != sig) {
      throw Error(ErrorCode::kSignatureMismatch, "root outside signature");
    }
  }
  sort_canonically(roots, grid);
  RootSystem rs;
  rs.sig = sig;
  rs.roots = std::move(roots);
  rs.simple_roots = std::move(simple_roots);
  rs.name = std::move(name);
  return rs;
}

std::vector<Multivector> extract_simple_roots(const RootSystem& rs,
                                              const Precision& precision) {
  const int dim = rs.sig.dimension();
  // Generic functional; bumped until no root is orthogonal to it.
  std::vector<double> f(static_cast<std::size_t>(dim));
  auto height = [&](const Multivector& r) {
    double h = 0.0;
    for (int i = 0; i < dim; ++i) h += f[static_cast<std::size_t>(i)] * r[BladeMask{1} << i];
    return h;
  };
  for (int attempt = 0;; ++attempt) {
    for (int i = 0; i < dim; ++i) {
      f[static_cast<std::size_t>(i)] =
          1.0 + std::sqrt(2.0 + i + attempt) * 0.37 + std::pow(0.31, i + 1);
    }
    bool generic = true;
    for (const auto& r : rs.roots) {
      if (std::abs(height(r)) <= 1e-6) {
        generic = false;
        break;
      }
    }
    if (generic) break;
    if (attempt > 64) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no generic functional found for simple-root extraction");
    }
  }

  std::vector<Multivector> positive;
  for (const auto& r : rs.roots) {
    if (height(r) > 0) positive.push_back(r);
  }
  KeyIndex positive_index(precision.grid);
  for (std::size_t i = 0; i < positive.size(); ++i) positive_index.insert(positive[i], i);

  std::vector<Multivector> simple;
  for (const auto& a : positive) {
    bool is_simple = true;
    for (const auto& b : positive) {
      if (approx_equal(a, b, precision.eps)) continue;
      if (!positive_index.contains(reflect(b, a, precision.eps))) {
        is_simple = false;
        break;
      }
    }
    if (is_simple) simple.push_back(a);
  }
  return simple;
}

}  // namespace versorlab

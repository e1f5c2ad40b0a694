#include "versorlab/induction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "versorlab/catalog.hpp"
#include "versorlab/error.hpp"

namespace versorlab {

namespace {

constexpr BladeMask kE12 = 0b011;
constexpr BladeMask kE13 = 0b101;
constexpr BladeMask kE23 = 0b110;

void require_even_cl3(const Multivector& r, double eps) {
  if (r.signature() != Signature(3, 0)) {
    throw Error(ErrorCode::kInvalidArgument, "spinor must live in Cl(3,0)");
  }
  if (!is_even(r, eps)) {
    throw Error(ErrorCode::kInvalidArgument,
                to_string(r) + " has odd-grade components");
  }
}

std::vector<std::int64_t> fingerprint(const RootSystem& rs, double grid) {
  std::vector<std::int64_t> fp;
  fp.reserve(rs.roots.size() * rs.roots.size() + 1);
  fp.push_back(static_cast<std::int64_t>(rs.roots.size()));
  std::vector<std::int64_t> products;
  for (const auto& a : rs.roots) {
    for (const auto& b : rs.roots) products.push_back(std::llround(dot(a, b) / grid));
  }
  std::sort(products.begin(), products.end());
  fp.insert(fp.end(), products.begin(), products.end());
  return fp;
}

}  // namespace

SpinorAs4DVector SpinorAs4DVector::from_multivector(const Multivector& r, double eps) {
  require_even_cl3(r, eps);
  return {r[0], r[kE23], -r[kE13], r[kE12]};
}

Multivector SpinorAs4DVector::to_multivector() const {
  Multivector r(Signature(3, 0));
  r.set(0, a0);
  r.set(kE23, a1);
  r.set(kE13, -a2);
  r.set(kE12, a3);
  return r;
}

Multivector SpinorAs4DVector::to_4d_vector() const {
  return Multivector::vector(Signature(4, 0), {a0, a1, a2, a3});
}

double spinor_inner(const Multivector& r1, const Multivector& r2, double eps) {
  require_even_cl3(r1, eps);
  require_even_cl3(r2, eps);
  const Multivector sym = (r1 * reverse(r2) + r2 * reverse(r1)) * 0.5;
  return sym.scalar_part();
}

InducedRootSystem4D induce_4d(const VersorGroup& g, const Precision& precision) {
  if (g.kind() != GroupKind::kSpin || g.signature() != Signature(3, 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "induction needs a spin group of a 3D root system");
  }
  std::vector<Multivector> vectors;
  vectors.reserve(g.order());
  for (const auto& e : g.elements()) {
    if (!g.contains(-e.mv())) {
      throw Error(ErrorCode::kAxiomViolation,
                  "spin group lacks the negative of " + to_string(e.mv()));
    }
    vectors.push_back(SpinorAs4DVector::from_multivector(e.mv(), precision.eps).to_4d_vector());
  }
  RootSystem base = make_root_system(Signature(4, 0), std::move(vectors), {},
                                     std::nullopt, precision.grid);
  const AxiomReport report = check_axioms(base, precision);
  if (!report.ok()) {
    throw Error(ErrorCode::kAxiomViolation,
                "induced 4D set is not a root system: " + report.detail);
  }
  base.simple_roots = extract_simple_roots(base, precision);
  std::string label = identify_4d(base, precision);
  base.name = label;
  return {std::move(base), g, std::move(label)};
}

Versor reflection_closure_witness(const VersorGroup& g, const Versor& r1,
                                  const Versor& r2, double eps) {
  if (!g.contains(r1.mv()) || !g.contains(r2.mv())) {
    throw Error(ErrorCode::kNotInGroup, "witness inputs must be group elements");
  }
  const Multivector classical =
      r2.mv() - r1.mv() * (2.0 * spinor_inner(r1.mv(), r2.mv(), eps) /
                           spinor_inner(r1.mv(), r1.mv(), eps));
  const Multivector product = -(r1.mv() * reverse(r2.mv()) * r1.mv());
  if (!approx_equal(classical, product, eps)) {
    throw Error(ErrorCode::kWitnessMismatch,
                "reflection formulas disagree: " + to_string(classical) + " vs " +
                    to_string(product));
  }
  if (!g.contains(product)) {
    throw Error(ErrorCode::kNotInGroup,
                "reflected spinor " + to_string(product) + " is not in the group");
  }
  return Versor::from_multivector(product, eps);
}

std::string identify_4d(const RootSystem& roots4d, const Precision& precision) {
  if (roots4d.sig != Signature(4, 0)) {
    throw Error(ErrorCode::kUnidentified, "identification needs roots in Cl(4,0)");
  }
  static const std::vector<std::pair<std::string, std::vector<std::int64_t>>> known =
      [] {
        std::vector<std::pair<std::string, std::vector<std::int64_t>>> out;
        for (const char* name : {"A1^4", "D4", "F4", "H4"}) {
          out.emplace_back(name, fingerprint(catalog(name), kHashGrid));
        }
        return out;
      }();
  const auto fp = fingerprint(roots4d, precision.grid);
  for (const auto& [name, reference] : known) {
    if (reference.size() != fp.size()) continue;
    bool match = true;
    // One grid cell of slack absorbs rounding at cell boundaries.
    for (std::size_t i = 0; i < fp.size() && match; ++i) {
      match = std::abs(fp[i] - reference[i]) <= 1;
    }
    if (match) return name;
  }
  throw Error(ErrorCode::kUnidentified,
              "no 4D catalog system matches " + std::to_string(roots4d.size()) +
                  " roots");
}

std::string identify_4d(const InducedRootSystem4D& induced, const Precision& precision) {
  return identify_4d(induced.base, precision);
}

SymmetryReport spinorial_automorphisms(const InducedRootSystem4D& r,
                                       const SymmetrySweepOptions& options) {
  const VersorGroup& g = r.source_group;
  const auto& elems = g.elements();
  const std::size_t n = elems.size();

  // Induced roots and group elements coincide, so permutations are read off
  // the group index.
  auto permutation = [&](const Multivector& left, const Multivector& right,
                         std::vector<std::uint16_t>& perm) {
    perm.assign(n, 0);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const std::ptrdiff_t at = g.index_of(left * elems[x].mv() * right);
      if (at < 0 || hit[static_cast<std::size_t>(at)]) return false;
      hit[static_cast<std::size_t>(at)] = true;
      perm[x] = static_cast<std::uint16_t>(at);
    }
    return true;
  };
  auto fail = [&](const Multivector& left, const Multivector& right) {
    throw Error(ErrorCode::kAxiomViolation,
                "pair (" + to_string(left) + ", " + to_string(right) +
                    ") does not permute the induced roots");
  };

  SymmetryReport report;
  report.group_order = n;
  report.nominal_pairs = n * n;
  const Multivector one = Multivector::scalar(g.signature(), 1.0);
  std::vector<std::uint16_t> perm;
  for (const auto& e : elems) {
    if (!permutation(e.mv(), one, perm)) fail(e.mv(), one);
    if (!permutation(one, e.mv(), perm)) fail(one, e.mv());
  }
  report.left_closed = true;
  report.right_closed = true;

  std::set<std::vector<std::uint16_t>> distinct;
  auto test_pair = [&](std::size_t li, std::size_t ri) {
    if (!permutation(elems[li].mv(), elems[ri].mv(), perm)) {
      fail(elems[li].mv(), elems[ri].mv());
    }
    distinct.insert(perm);
    ++report.pairs_tested;
  };
  if (options.sampled_pairs) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < *options.sampled_pairs; ++k) test_pair(pick(rng), pick(rng));
  } else {
    report.exhaustive = true;
    for (std::size_t li = 0; li < n; ++li) {
      for (std::size_t ri = 0; ri < n; ++ri) test_pair(li, ri);
    }
  }
  report.distinct_permutations = distinct.size();
  return report;
}

}  // namespace versorlab

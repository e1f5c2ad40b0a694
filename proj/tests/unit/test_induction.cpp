#include <doctest.h>

#include <map>

#include "support/checks.hpp"
#include "support/generators.hpp"
#include "versorlab/blade_key.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/induction.hpp"

using namespace versorlab;
using vltest::error_of;

namespace {

const Signature kCl3{3, 0};

Multivector random_even(vltest::Gen& gen) {
  Multivector r(kCl3);
  for (BladeMask b : {0b000u, 0b011u, 0b101u, 0b110u}) r.set(b, gen.uniform(-1, 1));
  return r;
}

// Histogram of rounded pairwise inner products, computed from raw coordinates.
std::map<long, std::size_t> gram_histogram(const std::vector<Multivector>& roots) {
  std::map<long, std::size_t> h;
  for (const auto& a : roots) {
    const auto ca = a.vector_coords();
    for (const auto& b : roots) {
      const auto cb = b.vector_coords();
      double s = 0.0;
      for (std::size_t i = 0; i < ca.size(); ++i) s += ca[i] * cb[i];
      ++h[std::lround(s * 1e6)];
    }
  }
  return h;
}

}  // namespace

TEST_CASE("spinor coordinates follow (1, e23, e31, e12)") {
  const auto r = Multivector::scalar(kCl3, 0.1) + Multivector::blade(kCl3, 0b110, 0.2) +
                 Multivector::blade(kCl3, 0b101, 0.3) + Multivector::blade(kCl3, 0b011, 0.4);
  const auto v = SpinorAs4DVector::from_multivector(r);
  CHECK(v.a0 == doctest::Approx(0.1));
  CHECK(v.a1 == doctest::Approx(0.2));
  CHECK(v.a2 == doctest::Approx(-0.3));
  CHECK(v.a3 == doctest::Approx(0.4));
  CHECK(approx_equal(v.to_multivector(), r));
  CHECK(approx_equal(v.to_4d_vector(), Multivector::vector(Signature{4, 0}, {0.1, 0.2, -0.3, 0.4})));
  CHECK(error_of([] {
          SpinorAs4DVector::from_multivector(Multivector::basis_vector(kCl3, 0));
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("property: spinor inner product is the Euclidean 4D dot") {
  vltest::Gen gen(40);
  for (int t = 0; t < 1000; ++t) {
    const auto r1 = random_even(gen), r2 = random_even(gen);
    const auto c1 = SpinorAs4DVector::from_multivector(r1).coords();
    const auto c2 = SpinorAs4DVector::from_multivector(r2).coords();
    double euclid = 0.0;
    for (int i = 0; i < 4; ++i) euclid += c1[static_cast<std::size_t>(i)] * c2[static_cast<std::size_t>(i)];
    REQUIRE(spinor_inner(r1, r2) == doctest::Approx(euclid).epsilon(1e-12));
    REQUIRE(spinor_inner(r1, r2) == doctest::Approx(spinor_inner(r2, r1)).epsilon(1e-12));
    REQUIRE(spinor_inner(r1, r1) == doctest::Approx((r1 * reverse(r1)).scalar_part()).epsilon(1e-12));
  }
}

TEST_CASE("induced 4D root systems") {
  const std::tuple<const char*, const char*, std::size_t> rows[] = {
      {"A1^3", "A1^4", 8}, {"A3", "D4", 24}, {"B3", "F4", 48}, {"H3", "H4", 120}};
  for (const auto& [src, label, n] : rows) {
    CAPTURE(src);
    const InducedRootSystem4D induced = induce_4d(generate_spin(catalog(src)));
    CHECK(induced.identification == label);
    CHECK(induced.base.size() == n);
    CHECK(induced.base.sig == Signature(4, 0));
    CHECK(check_axioms(induced.base).ok());
    CHECK(induced.base.rank() == 4);
    // Independent comparison with the catalog system's Gram statistics.
    CHECK(gram_histogram(induced.base.roots) == gram_histogram(catalog(label).roots));
  }
}

TEST_CASE("induced D4 is the Hurwitz lattice's unit shell") {
  const InducedRootSystem4D induced = induce_4d(generate_spin(catalog("A3")));
  std::size_t axis = 0, half = 0;
  for (const auto& r : induced.base.roots) {
    std::size_t nonzero = 0;
    for (double c : r.vector_coords()) {
      if (std::abs(c) > 1e-9) {
        ++nonzero;
        CHECK((std::abs(c) == doctest::Approx(1.0) || std::abs(c) == doctest::Approx(0.5)));
      }
    }
    if (nonzero == 1) ++axis;
    if (nonzero == 4) ++half;
  }
  CHECK(axis == 8);
  CHECK(half == 16);
}

TEST_CASE("witness formulas agree on every pair of 2T") {
  const VersorGroup g = generate_spin(catalog("A3"));
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) {
      const Versor w = reflection_closure_witness(g, a, b);
      // Direct 4D arithmetic as a second opinion.
      const auto va = SpinorAs4DVector::from_multivector(a.mv()).coords();
      const auto vb = SpinorAs4DVector::from_multivector(b.mv()).coords();
      double ab = 0.0, aa = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        ab += va[i] * vb[i];
        aa += va[i] * va[i];
      }
      const auto vw = SpinorAs4DVector::from_multivector(w.mv()).coords();
      for (std::size_t i = 0; i < 4; ++i) REQUIRE(vw[i] == doctest::Approx(vb[i] - 2 * ab / aa * va[i]));
    }
}

TEST_CASE("witness rejects non-members") {
  const VersorGroup g = generate_spin(catalog("A3"));
  const Versor outside = exp_bivector(Multivector::blade(kCl3, 0b011), 0.3);
  CHECK(error_of([&] { reflection_closure_witness(g, outside, g.elements()[0]); }) ==
        ErrorCode::kNotInGroup);
}

TEST_CASE("identification and induction errors") {
  CHECK(error_of([] { identify_4d(catalog("B4")); }) == ErrorCode::kUnidentified);
  CHECK(error_of([] { identify_4d(catalog("A3")); }) == ErrorCode::kUnidentified);
  CHECK(identify_4d(catalog("D4")) == "D4");
  CHECK(identify_4d(catalog("H4")) == "H4");
  CHECK(error_of([] { induce_4d(generate_pin(catalog("A3"))); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { induce_4d(generate_spin(catalog("D4"))); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("identification is rotation invariant") {
  vltest::Gen gen(41);
  const Signature s4{4, 0};
  const RootSystem f4 = catalog("F4");
  for (int t = 0; t < 5; ++t) {
    const Versor rot = gen.versor(s4, 2);
    std::vector<Multivector> moved;
    for (const auto& r : f4.roots) moved.push_back(sandwich(r, rot));
    CHECK(identify_4d(make_root_system(s4, moved)) == "F4");
  }
}

TEST_CASE("left-right action on 2T exhaustively") {
  const InducedRootSystem4D induced = induce_4d(generate_spin(catalog("A3")));
  const SymmetryReport rep = spinorial_automorphisms(induced);
  CHECK(rep.exhaustive);
  CHECK(rep.pairs_tested == 576);
  CHECK(rep.nominal_pairs == 576);
  CHECK(rep.left_closed);
  CHECK(rep.right_closed);
  // (L, R) and (-L, -R) act identically and nothing else collapses.
  CHECK(rep.distinct_permutations == 288);
}

TEST_CASE("left-right action on 2O and 2I sampled") {
  for (const char* name : {"B3", "H3"}) {
    CAPTURE(name);
    const InducedRootSystem4D induced = induce_4d(generate_spin(catalog(name)));
    SymmetrySweepOptions opts;
    opts.sampled_pairs = 3000;
    opts.seed = vltest::base_seed();
    const SymmetryReport rep = spinorial_automorphisms(induced, opts);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.pairs_tested == 3000);
    CHECK(rep.distinct_permutations <= rep.nominal_pairs / 2);
  }
}

TEST_CASE("left-right images land on the 4D root set") {
  vltest::Gen gen(42);
  const InducedRootSystem4D induced = induce_4d(generate_spin(catalog("H3")));
  KeyIndex roots;
  for (std::size_t i = 0; i < induced.base.size(); ++i)
    roots.insert(induced.base.roots[i], static_cast<std::ptrdiff_t>(i));
  const auto& elems = induced.source_group.elements();
  const int n = static_cast<int>(elems.size());
  for (int t = 0; t < 200; ++t) {
    const auto& l = elems[static_cast<std::size_t>(gen.integer(0, n - 1))];
    const auto& r = elems[static_cast<std::size_t>(gen.integer(0, n - 1))];
    const auto& x = elems[static_cast<std::size_t>(gen.integer(0, n - 1))];
    const auto image = SpinorAs4DVector::from_multivector((l * x * r).mv()).to_4d_vector();
    REQUIRE(roots.contains(image));
  }
}

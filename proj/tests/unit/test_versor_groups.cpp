#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "support/checks.hpp"
#include "support/generators.hpp"
#include "versorlab/catalog.hpp"
#include "versorlab/versor_group.hpp"

using namespace versorlab;
using vltest::error_of;

namespace {

const Signature kCl3{3, 0};

Multivector bl(BladeMask m, double c = 1.0) { return Multivector::blade(kCl3, m, c); }
Multivector one(double c = 1.0) { return Multivector::scalar(kCl3, c); }

std::vector<Multivector> mvs(const std::vector<Versor>& vs) {
  std::vector<Multivector> out;
  for (const auto& v : vs) out.push_back(v.mv());
  return out;
}

std::vector<std::size_t> sizes(const auto& classes) {
  std::vector<std::size_t> s;
  for (const auto& c : classes) s.push_back(c.size());
  return s;
}

// Quaternion (w, x, y, z) = w + xi + yj + zk with Hamilton's rules.
using Quat = std::array<double, 4>;

Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

// i, j, k -> -e23, -e31, -e12 is an algebra isomorphism onto the even subalgebra.
Multivector from_quat(const Quat& q) {
  return one(q[0]) - bl(0b110, q[1]) + bl(0b101, q[2]) - bl(0b011, q[3]);
}

// The 24 Hurwitz units.
std::vector<Quat> hurwitz_units() {
  std::vector<Quat> out;
  for (int axis = 0; axis < 4; ++axis)
    for (double s : {1.0, -1.0}) {
      Quat q{0, 0, 0, 0};
      q[static_cast<std::size_t>(axis)] = s;
      out.push_back(q);
    }
  for (int mask = 0; mask < 16; ++mask) {
    Quat q;
    for (int b = 0; b < 4; ++b) q[static_cast<std::size_t>(b)] = (mask >> b & 1) ? -0.5 : 0.5;
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("quaternion oracle sanity") {
  const Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(qmul(qmul(i, j), k) == Quat{-1, 0, 0, 0});
  CHECK(approx_equal(from_quat(i) * from_quat(j), from_quat(k)));
  CHECK(approx_equal(from_quat(i) * from_quat(i), one(-1.0)));
}

TEST_CASE("Pin(A1) and Spin(A1^3)") {
  const RootSystem a1 = catalog("A1");
  const VersorGroup pin = generate_pin(a1);
  const Signature s1{1, 0};
  CHECK(pin.order() == 4);
  CHECK(vltest::same_set(mvs(pin.elements()),
                         {Multivector::scalar(s1, 1), Multivector::scalar(s1, -1),
                          Multivector::basis_vector(s1, 0), -Multivector::basis_vector(s1, 0)}));
  CHECK(generate_spin(a1).order() == 2);

  const VersorGroup q8 = generate_spin(catalog("A1^3"));
  CHECK(q8.order() == 8);
  CHECK(vltest::same_set(mvs(q8.elements()), {one(), one(-1), bl(0b011), bl(0b011, -1), bl(0b101),
                                              bl(0b101, -1), bl(0b110), bl(0b110, -1)}));
  CHECK(sizes(conjugacy_classes(q8)) == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("Spin(A3) is the Hurwitz unit group") {
  const VersorGroup g = generate_spin(catalog("A3"));
  CHECK(g.order() == 24);
  std::vector<Multivector> oracle;
  for (const auto& q : hurwitz_units()) oracle.push_back(from_quat(q));
  CHECK(vltest::same_set(mvs(g.elements()), oracle));
  // Products follow the quaternion table.
  const auto units = hurwitz_units();
  for (const auto& p : units)
    for (const auto& q : units) REQUIRE(g.contains(from_quat(qmul(p, q))));
  for (const auto& p : units)
    for (const auto& q : units)
      REQUIRE(approx_equal(from_quat(p) * from_quat(q), from_quat(qmul(p, q))));
}

TEST_CASE("Spin(A3) conjugacy classes") {
  const VersorGroup g = generate_spin(catalog("A3"));
  const auto classes = conjugacy_classes(g);
  REQUIRE(sizes(classes) == std::vector<std::size_t>{1, 1, 4, 4, 4, 4, 6});
  CHECK(vltest::same_set(mvs(classes[6].members), {bl(0b011), bl(0b011, -1), bl(0b110),
                                                   bl(0b110, -1), bl(0b101), bl(0b101, -1)}));
  // Each size-4 class shares its scalar part.
  for (std::size_t c = 2; c < 6; ++c) {
    const double s = classes[c].members.front().mv().scalar_part();
    CHECK(std::abs(s) == doctest::Approx(0.5));
    for (const auto& m : classes[c].members) CHECK(m.mv().scalar_part() == doctest::Approx(s));
  }
  const auto pairing = inverse_pairing(g, classes);
  for (std::size_t c = 0; c < classes.size(); ++c) CHECK(pairing[pairing[c]] == c);
  CHECK(pairing[2] != 2);
  CHECK(pairing[6] == 6);
}

TEST_CASE("Pin(A3) conjugacy classes") {
  const RootSystem a3 = catalog("A3");
  const VersorGroup g = generate_pin(a3);
  CHECK(g.order() == 48);
  const auto classes = conjugacy_classes(g);
  REQUIRE(sizes(classes) == std::vector<std::size_t>{1, 1, 6, 6, 6, 8, 8, 12});
  CHECK(vltest::same_set(mvs(classes[7].members), a3.roots));
}

TEST_CASE("sign quotients of the A3 groups") {
  const RootSystem a3 = catalog("A3");
  const QuotientGroup chiral = quotient_by_sign(generate_spin(a3));
  CHECK(chiral.kind == QuotientKind::kRotation);
  CHECK(chiral.order() == 12);
  CHECK(chiral.covering_order == 24);
  CHECK(sizes(chiral.classes) == std::vector<std::size_t>{1, 3, 4, 4});
  const QuotientGroup full = quotient_by_sign(generate_pin(a3));
  CHECK(full.kind == QuotientKind::kReflection);
  CHECK(full.order() == 24);
  CHECK(sizes(full.classes) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  // Representatives carry a positive leading coefficient.
  for (const auto& e : chiral.elements) {
    const auto key = BladeKey(e.mv());
    CHECK_FALSE(key < BladeKey(-e.mv()));
  }
}

TEST_CASE("larger groups") {
  CHECK(generate_spin(catalog("B3")).order() == 48);
  CHECK(generate_pin(catalog("B3")).order() == 96);
  const VersorGroup spin_h3 = generate_spin(catalog("H3"));
  CHECK(spin_h3.order() == 120);
  CHECK(conjugacy_classes(spin_h3).size() == 9);
  CHECK(generate_pin(catalog("H3")).order() == 240);
  CHECK(quotient_by_sign(spin_h3).classes.size() == 5);
}

TEST_CASE("commutator subgroup of 2T is Q8") {
  const VersorGroup g = generate_spin(catalog("A3"));
  std::vector<Versor> commutators;
  for (const auto& a : g.elements())
    for (const auto& b : g.elements()) commutators.push_back(a * b * a.inverse() * b.inverse());
  const auto derived = close_under_products(commutators);
  CHECK(vltest::same_set(mvs(derived), mvs(generate_spin(catalog("A1^3")).elements())));
}

TEST_CASE("element orders") {
  const VersorGroup g = generate_spin(catalog("A3"));
  CHECK(element_order(g, one()) == 1);
  CHECK(element_order(g, one(-1)) == 2);
  CHECK(element_order(g, bl(0b011)) == 4);
  const auto sixth = 0.5 * (one() + bl(0b011) + bl(0b110) - bl(0b101));
  CHECK(element_order(g, sixth) == 6);
  CHECK(element_order(g, -sixth) == 3);
  CHECK(projective_order(Versor::from_multivector(bl(0b011))) == 2);
  CHECK(projective_order(Versor::from_multivector(one(-1))) == 1);
  CHECK(error_of([&] { element_order(g, bl(0b111)); }) == ErrorCode::kNotInGroup);
}

TEST_CASE("exponential decomposition of Spin(A3)") {
  const auto forms = exp_decomposition(generate_spin(catalog("A3")));
  std::size_t scalars = 0, thirds = 0, halves = 0;
  std::vector<std::array<int, 3>> patterns;
  for (const auto& f : forms) {
    const Multivector rebuilt =
        f.is_scalar ? one(f.sign) : f.sign * exp_bivector(*f.bivector, f.theta).mv();
    CHECK(approx_equal(rebuilt, f.element.mv()));
    if (f.is_scalar) {
      ++scalars;
    } else if (std::abs(f.theta - std::numbers::pi / 3) < 1e-9) {
      ++thirds;
      // sqrt3 B = +-e12 +- e23 +- e31.
      const Multivector b = std::sqrt(3.0) * *f.bivector;
      std::array<int, 3> p{};
      const BladeMask blades[3] = {0b011, 0b110, 0b101};
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(b[blades[k]]) == doctest::Approx(1.0));
        p[static_cast<std::size_t>(k)] = b[blades[k]] > 0 ? 1 : -1;
      }
      patterns.push_back(p);
    } else if (std::abs(f.theta - std::numbers::pi / 2) < 1e-9) {
      ++halves;
    }
  }
  CHECK(scalars == 2);
  CHECK(thirds == 16);
  CHECK(halves == 6);
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  CHECK(patterns.size() == 8);
}

TEST_CASE("central inversion lies in Pin(B3) only") {
  const Multivector i3 = bl(0b111);
  CHECK_FALSE(generate_pin(catalog("A3")).contains(i3));
  CHECK(generate_pin(catalog("B3")).contains(i3));
  CHECK(generate_pin(catalog("H3")).contains(i3));
}

TEST_CASE("group construction errors") {
  const Signature sig{3, 0};
  const auto e1 = Multivector::basis_vector(sig, 0), e2 = Multivector::basis_vector(sig, 1);
  CHECK(error_of([&] { generate_pin(make_root_system(sig, {e1, -e1, e2})); }) ==
        ErrorCode::kAxiomViolation);
  GroupClosureOptions tight;
  tight.max_elements = 50;
  CHECK(error_of([&] { generate_spin(catalog("H3"), tight); }) == ErrorCode::kClosureCapExceeded);
  const VersorGroup half(GroupKind::kPin, close_under_products({Versor::from_multivector(e1)}),
                         catalog("A1^3"));
  CHECK(half.order() == 2);
  CHECK(error_of([&] { quotient_by_sign(half); }) == ErrorCode::kNotInGroup);
  CHECK(error_of([] { exp_decomposition(generate_pin(catalog("A3"))); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("property: groups are closed under products and inverses") {
  vltest::Gen gen(30);
  for (const char* name : {"A3", "B3", "H3"}) {
    CAPTURE(name);
    const VersorGroup g = generate_pin(catalog(name));
    const int n = static_cast<int>(g.order());
    for (int t = 0; t < 300; ++t) {
      const auto& a = g.elements()[static_cast<std::size_t>(gen.integer(0, n - 1))];
      const auto& b = g.elements()[static_cast<std::size_t>(gen.integer(0, n - 1))];
      REQUIRE(g.contains((a * b).mv()));
      REQUIRE(g.contains(a.inverse().mv()));
      REQUIRE(g.contains(a.negated().mv()));
    }
  }
}

TEST_CASE("property: conjugation preserves classes") {
  vltest::Gen gen(31);
  const VersorGroup g = generate_spin(catalog("H3"));
  const auto classes = conjugacy_classes(g);
  const int n = static_cast<int>(g.order());
  for (int t = 0; t < 300; ++t) {
    const auto& c = classes[static_cast<std::size_t>(gen.integer(0, int(classes.size()) - 1))];
    const auto& x = c.members[static_cast<std::size_t>(gen.integer(0, int(c.size()) - 1))];
    const auto& h = g.elements()[static_cast<std::size_t>(gen.integer(0, n - 1))];
    REQUIRE(vltest::contains_approx(mvs(c.members), (h.inverse() * x * h).mv()));
    REQUIRE(element_order(g, x.mv()) == element_order(g, c.representative.mv()));
  }
}

TEST_CASE("property: group elements act orthogonally on the roots") {
  vltest::Gen gen(32);
  const RootSystem rs = catalog("H3");
  const VersorGroup g = generate_pin(rs);
  for (int t = 0; t < 200; ++t) {
    const auto& a = g.elements()[static_cast<std::size_t>(gen.integer(0, int(g.order()) - 1))];
    const auto& r = rs.roots[static_cast<std::size_t>(gen.integer(0, int(rs.size()) - 1))];
    REQUIRE(vltest::contains_approx(rs.roots, sandwich(r, a)));
  }
}

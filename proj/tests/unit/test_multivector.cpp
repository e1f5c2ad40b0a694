#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/checks.hpp"
#include "support/generators.hpp"
#include "versorlab/blade_key.hpp"
#include "versorlab/versor.hpp"

using namespace versorlab;
using vltest::error_of;

namespace {

const Signature kCl3{3, 0};

Multivector e(int i, Signature sig = kCl3) { return Multivector::basis_vector(sig, i - 1); }

}  // namespace

TEST_CASE("basis products follow the metric") {
  CHECK(approx_equal(e(1) * e(1), Multivector::scalar(kCl3, 1.0)));
  CHECK(approx_equal(e(1) * e(2), Multivector::blade(kCl3, 0b011)));
  CHECK(approx_equal(e(2) * e(1), Multivector::blade(kCl3, 0b011, -1.0)));

  const Signature mixed{1, 1};
  CHECK(approx_equal(e(2, mixed) * e(2, mixed), Multivector::scalar(mixed, -1.0)));
  // e1 e2 e1 e2 = -e1 e1 e2 e2 = +1 in Cl(1,1).
  const auto b = e(1, mixed) * e(2, mixed);
  CHECK(approx_equal(b * b, Multivector::scalar(mixed, 1.0)));

  const auto e123 = e(1) * e(2) * e(3);
  CHECK(approx_equal(e123 * e123, Multivector::scalar(kCl3, -1.0)));
}

TEST_CASE("reverse of a trivector against the explicit reversed product") {
  const auto forward = e(1) * e(2) * e(3);
  const auto backward = e(3) * e(2) * e(1);
  CHECK(approx_equal(reverse(forward), backward));
  CHECK(approx_equal(backward, -forward));
}

TEST_CASE("grade projection and parity") {
  const auto m = Multivector::scalar(kCl3, 2.0) + e(1) + e(1) * e(2) + e(1) * e(2) * e(3);
  CHECK(approx_equal(grade_project(m, 1), e(1)));
  CHECK(is_homogeneous_grade(grade_project(m, 2), 2));
  CHECK_FALSE(is_even(m));
  CHECK(is_even(grade_project(m, 0) + grade_project(m, 2)));
  CHECK(is_odd(e(2) + e(1) * e(2) * e(3)));
  CHECK(is_zero(m - m));
}

TEST_CASE("blade names round trip") {
  for (BladeMask b = 0; b < 16; ++b) {
    CHECK(parse_blade_name(blade_name(b), Signature{4, 0}) == b);
  }
  CHECK(blade_name(0) == "1");
  CHECK(blade_name(0b101) == "e13");
  CHECK(to_string(Multivector::scalar(kCl3, 0.5) - Multivector::blade(kCl3, 0b011, 0.5)) ==
        "0.5 - 0.5e12");
  CHECK(error_of([] { parse_blade_name("e19", kCl3); }) == ErrorCode::kParseError);
}

TEST_CASE("invalid inputs raise typed errors") {
  CHECK(error_of([] { Signature(5, 4); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { (void)(e(1) * e(1, Signature{4, 0})); }) == ErrorCode::kSignatureMismatch);
  CHECK(error_of([] { Versor::from_multivector(2.0 * e(1)); }) == ErrorCode::kNonUnitVersor);
  CHECK(error_of([] {
          Versor::from_multivector(Multivector::scalar(kCl3, 1.0) + e(1));
        }) == ErrorCode::kNonUnitVersor);
  CHECK(error_of([] { exp_bivector(e(1), 0.3); }) == ErrorCode::kNotABivector);
  CHECK(error_of([] { exp_bivector(2.0 * e(1) * e(2), 0.3); }) == ErrorCode::kNotABivector);
}

TEST_CASE("rotor by a quarter of pi carries e1 to e2") {
  const Versor r = exp_bivector(e(1) * e(2), std::numbers::pi / 4);
  CHECK(approx_equal(sandwich(e(1), r), e(2)));
  CHECK(approx_equal(sandwich(e(3), r), e(3)));
}

TEST_CASE("exponential with third-of-pi angle") {
  const auto b = (e(1) * e(2) + e(2) * e(3) + e(3) * e(1)) / std::sqrt(3.0);
  const Versor r = exp_bivector(b, std::numbers::pi / 3);
  // By hand: cos(pi/3) = 1/2 and sin(pi/3)/sqrt(3) = 1/2; e31 = -e13.
  const auto expected = 0.5 * (Multivector::scalar(kCl3, 1.0) + Multivector::blade(kCl3, 0b011) +
                               Multivector::blade(kCl3, 0b110) - Multivector::blade(kCl3, 0b101));
  CHECK(approx_equal(r.mv(), expected));
}

TEST_CASE("reflection of one A3 simple root in another") {
  const double s = 1.0 / std::sqrt(2.0);
  const auto a1 = (e(2) - e(1)) * s;
  const auto a2 = (e(3) - e(2)) * s;
  CHECK(approx_equal(reflect(a2, a1), (e(3) - e(1)) * s));
  CHECK(approx_equal(reflect_by_product(a2, a1), (e(3) - e(1)) * s));
}

TEST_CASE("versor inverse and odd sandwich sign") {
  const Versor a = Versor::from_vectors(std::vector{e(1) + e(2)});
  CHECK(a.parity() == Parity::kOdd);
  CHECK(approx_equal((a * a.inverse()).mv(), Multivector::scalar(kCl3, 1.0)));
  // A single unit vector acts as a reflection.
  const auto n = (e(1) + e(2)) / std::sqrt(2.0);
  CHECK(approx_equal(sandwich(e(1), a), -e(2)));
  CHECK(approx_equal(sandwich(e(3), a), e(3)));
  CHECK(approx_equal(sandwich(n, a), -n));

  const Signature cga{3, 1};
  const Versor ebar = Versor::from_vectors(std::vector{e(4, cga)});
  CHECK(ebar.norm_sign() == doctest::Approx(-1.0));
  CHECK(approx_equal(sandwich(e(4, cga), ebar), -e(4, cga)));
  CHECK(approx_equal(sandwich(e(1, cga), ebar), e(1, cga)));
}

TEST_CASE("blade keys absorb rounding noise") {
  const auto a = e(1) * 0.5 + e(2) * 0.25;
  const auto b = a + e(3) * 1e-12;
  CHECK(BladeKey(a) == BladeKey(b));
  CHECK_FALSE(BladeKey(a) == BladeKey(-a));
  CHECK_FALSE(BladeKey(a) == BladeKey(a + e(3) * 1e-3));
  KeyIndex index;
  index.insert(a, 7);
  CHECK(index.find(b) == 7);
  CHECK(index.find(-a) == -1);
}

TEST_CASE("property: geometric product is associative") {
  vltest::Gen gen(1);
  for (Signature sig : {Signature{3, 0}, Signature{3, 1}, Signature{4, 0}, Signature{2, 2}}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = gen.multivector(sig), b = gen.multivector(sig), c = gen.multivector(sig);
      REQUIRE(approx_equal((a * b) * c, a * (b * c), 1e-9));
    }
  }
}

TEST_CASE("property: reversal is an anti-automorphism") {
  vltest::Gen gen(2);
  for (Signature sig : {Signature{3, 0}, Signature{3, 1}, Signature{5, 0}}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = gen.multivector(sig), b = gen.multivector(sig);
      REQUIRE(approx_equal(reverse(a * b), reverse(b) * reverse(a), 1e-9));
      REQUIRE(approx_equal(reverse(reverse(a)), a, 1e-12));
    }
  }
}

TEST_CASE("property: both reflection formulas agree") {
  vltest::Gen gen(3);
  for (int dim = 2; dim <= 8; ++dim) {
    const Signature sig{dim, 0};
    for (int i = 0; i < 100; ++i) {
      const auto v = gen.vector(sig), a = gen.vector(sig);
      REQUIRE(approx_equal(reflect(v, a), reflect_by_product(v, a), 1e-9));
      REQUIRE(approx_equal(reflect(reflect(v, a), a), v, 1e-9));
    }
  }
}

TEST_CASE("property: sandwich preserves the inner product") {
  vltest::Gen gen(4);
  for (int i = 0; i < 300; ++i) {
    const Versor a = gen.versor(kCl3, gen.integer(1, 4));
    const auto u = gen.vector(kCl3), w = gen.vector(kCl3);
    REQUIRE(dot(sandwich(u, a), sandwich(w, a)) == doctest::Approx(dot(u, w)).epsilon(1e-9));
    REQUIRE(is_homogeneous_grade(sandwich(u, a), 1));
  }
}

TEST_CASE("property: exponentials of one bivector add angles") {
  vltest::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    const auto b = gen.unit_bivector3();
    const double s = gen.uniform(-4.0, 4.0), t = gen.uniform(-4.0, 4.0);
    REQUIRE(approx_equal(exp_bivector(b, s).mv() * exp_bivector(b, t).mv(),
                         exp_bivector(b, s + t).mv(), 1e-9));
  }
}

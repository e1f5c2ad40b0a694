#include "versorlab/cga2d.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "versorlab/error.hpp"

namespace versorlab::cga {

namespace {

constexpr BladeMask kE1 = 0b0001;
constexpr BladeMask kE2 = 0b0010;

Multivector plane_vector(double a1, double a2) {
  return Multivector::vector(kSignature, {a1, a2, 0.0, 0.0});
}

Multivector one() { return Multivector::scalar(kSignature, 1.0); }

ConformalVersor make(const Multivector& mv, ConformalKind kind) {
  return {Versor::from_multivector(mv), kind};
}

}  // namespace

Multivector e1() { return Multivector::basis_vector(kSignature, 0); }
Multivector e2() { return Multivector::basis_vector(kSignature, 1); }
Multivector e() { return Multivector::basis_vector(kSignature, 2); }
Multivector ebar() { return Multivector::basis_vector(kSignature, 3); }
Multivector n() { return e() + ebar(); }
Multivector nbar() { return e() - ebar(); }
Multivector N() { return e() * ebar(); }

ConformalPoint ConformalPoint::from_null_vector(const Multivector& x, double eps) {
  if (x.signature() != kSignature || !is_homogeneous_grade(x, 1, eps)) {
    throw Error(ErrorCode::kInvalidArgument,
                "conformal points are grade-1 vectors of Cl(3,1)");
  }
  const double scale = coefficient_norm(x);
  const double xn = dot(x, n());
  if (std::abs(xn) <= eps * std::max(1.0, scale)) {
    throw Error(ErrorCode::kPointAtInfinity, "point at infinity (X.n = 0)");
  }
  const Multivector normalized = x / (-xn);
  if (std::abs(dot(normalized, normalized)) > 1e3 * eps * std::max(1.0, scale / std::abs(xn))) {
    throw Error(ErrorCode::kInvalidArgument,
                to_string(x) + " is not a null vector");
  }
  return ConformalPoint(normalized);
}

Multivector conformal_lift(double x1, double x2) {
  const Multivector x = plane_vector(x1, x2);
  return n() * (x1 * x1 + x2 * x2) + x * 2.0 - nbar();
}

ConformalPoint embed(double x1, double x2) {
  return ConformalPoint::from_null_vector(conformal_lift(x1, x2));
}

ConformalPoint embed(Point2 x) { return embed(x.x1, x.x2); }

Point2 extract(const Multivector& x, double eps) {
  const double xn = dot(x, n());
  if (std::abs(xn) <= eps * std::max(1.0, coefficient_norm(x))) {
    throw Error(ErrorCode::kPointAtInfinity, "point at infinity (X.n = 0)");
  }
  // Normalized X = x^2 n / 2 + x - nbar / 2 once X.n = -1.
  return {x[kE1] / -xn, x[kE2] / -xn};
}

Point2 extract(const ConformalPoint& x, double eps) { return extract(x.X(), eps); }

std::string_view to_string(ConformalKind kind) {
  switch (kind) {
    case ConformalKind::kTranslation: return "translation";
    case ConformalKind::kRotation: return "rotation";
    case ConformalKind::kDilation: return "dilation";
    case ConformalKind::kSpecialConformal: return "special_conformal";
    case ConformalKind::kReflection: return "reflection";
    case ConformalKind::kInversion: return "inversion";
    case ConformalKind::kComposite: return "composite";
  }
  return "composite";
}

Multivector transform(const ConformalVersor& a, const Multivector& x, double eps) {
  // sandwich(x, B) = +-B^-1 x B, so B = A^-1 gives +-A x A^-1.
  return sandwich(x, a.versor.inverse(), eps);
}

ConformalPoint apply(const ConformalVersor& a, const ConformalPoint& x, double eps) {
  return ConformalPoint::from_null_vector(transform(a, x.X(), eps), eps);
}

ConformalVersor compose(const ConformalVersor& a, const ConformalVersor& b) {
  return {b.versor * a.versor, ConformalKind::kComposite};
}

ConformalVersor translator(double a1, double a2) {
  return make(one() + n() * plane_vector(a1, a2) * 0.5, ConformalKind::kTranslation);
}

ConformalVersor rotor(double phi) {
  return {exp_bivector(e1() * e2(), -phi / 2), ConformalKind::kRotation};
}

ConformalVersor dilator(double alpha) {
  return make(one() * std::cosh(alpha / 2) + N() * std::sinh(alpha / 2),
              ConformalKind::kDilation);
}

ConformalVersor special_conformal(double a1, double a2) {
  return make(one() - nbar() * plane_vector(a1, a2) * 0.5,
              ConformalKind::kSpecialConformal);
}

ConformalVersor reflection(double a1, double a2) {
  const double len = std::hypot(a1, a2);
  if (len <= kEpsilon) {
    throw Error(ErrorCode::kInvalidArgument, "reflection needs a nonzero vector");
  }
  return make(plane_vector(a1 / len, a2 / len), ConformalKind::kReflection);
}

ConformalVersor inversion_versor() { return make(e(), ConformalKind::kInversion); }

ConformalVersor modular_S() { return make(e1() * e(), ConformalKind::kComposite); }

ConformalVersor modular_T() { return translator(1.0, 0.0); }

ConformalVersor modular_T_inverse() { return translator(-1.0, 0.0); }

ModularWord ModularWord::parse(std::string_view letters) {
  for (char c : letters) {
    if (c != 'S' && c != 'T' && c != 't') {
      throw Error(ErrorCode::kParseError,
                  std::string("modular word letter '") + c + "' not in {S, T, t}");
    }
  }
  return ModularWord(std::string(letters));
}

static const ConformalVersor& letter_versor(char c) {
  static const ConformalVersor s = modular_S();
  static const ConformalVersor t = modular_T();
  static const ConformalVersor t_inv = modular_T_inverse();
  return c == 'S' ? s : (c == 'T' ? t : t_inv);
}

ConformalVersor word_versor(const ModularWord& word) {
  ConformalVersor out{Versor::identity(kSignature), ConformalKind::kComposite};
  for (char c : word.letters()) out = compose(out, letter_versor(c));
  return out;
}

Point2 apply_word(const ModularWord& word, Point2 tau, double eps) {
  if (!(tau.x2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in the upper half-plane");
  }
  ConformalPoint x = embed(tau);
  for (char c : word.letters()) x = apply(letter_versor(c), x, eps);
  return extract(x, eps);
}

Point2 mobius_apply(const ModularWord& word, Point2 tau, double eps) {
  std::complex<double> z(tau.x1, tau.x2);
  for (char c : word.letters()) {
    if (c == 'T') {
      z += 1.0;
    } else if (c == 't') {
      z -= 1.0;
    } else {
      if (std::abs(z) <= eps) {
        throw Error(ErrorCode::kPointAtInfinity, "S maps 0 to infinity");
      }
      z = -1.0 / z;
    }
  }
  return {z.real(), z.imag()};
}

ModularComparison compare_with_oracle(const ModularWord& word, Point2 tau, double eps) {
  ModularComparison out;
  out.input = tau;
  out.word = word.letters();
  out.versor_result = apply_word(word, tau, eps);
  out.oracle_result = mobius_apply(word, tau, eps);
  const double scale =
      std::max(1.0, std::hypot(out.oracle_result.x1, out.oracle_result.x2));
  out.max_deviation =
      std::max(std::abs(out.versor_result.x1 - out.oracle_result.x1),
               std::abs(out.versor_result.x2 - out.oracle_result.x2)) /
      scale;
  return out;
}

}  // namespace versorlab::cga

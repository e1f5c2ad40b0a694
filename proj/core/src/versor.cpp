#include "versorlab/versor.hpp"

#include <cmath>

#include "versorlab/error.hpp"

namespace versorlab {

Versor Versor::from_multivector(const Multivector& mv, double eps) {
  Parity parity;
  if (is_even(mv, eps)) {
    parity = Parity::kEven;
  } else if (is_odd(mv, eps)) {
    parity = Parity::kOdd;
  } else {
    throw Error(ErrorCode::kNonUnitVersor,
                "mixed-parity multivector " + to_string(mv) + " is not a versor");
  }
  const Multivector n = mv * reverse(mv);
  const double s = n.scalar_part();
  if (!is_homogeneous_grade(n, 0, eps) || std::abs(std::abs(s) - 1.0) > eps) {
    throw Error(ErrorCode::kNonUnitVersor,
                to_string(mv) + " is not a unit versor (A*rev(A) = " +
                    to_string(n) + ")");
  }
  return Versor(mv, parity, s > 0 ? 1.0 : -1.0);
}

Versor Versor::from_vectors(std::span<const Multivector> vectors, double eps) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty vector list");
  }
  Multivector product = Multivector::scalar(vectors.front().signature(), 1.0);
  for (const auto& v : vectors) {
    if (!is_homogeneous_grade(v, 1, eps)) {
      throw Error(ErrorCode::kInvalidArgument,
                  to_string(v) + " is not a grade-1 vector");
    }
    const double n2 = dot(v, v);
    if (std::abs(n2) <= eps) {
      throw Error(ErrorCode::kNonUnitVersor, "null vector " + to_string(v));
    }
    product = product * (v / std::sqrt(std::abs(n2)));
  }
  return from_multivector(product, eps);
}

Versor Versor::identity(Signature sig) {
  return Versor(Multivector::scalar(sig, 1.0), Parity::kEven, 1.0);
}

Versor Versor::inverse() const {
  return Versor(reverse(mv_) * norm_sign_, parity_, norm_sign_);
}

Versor Versor::negated() const { return Versor(-mv_, parity_, norm_sign_); }

Versor operator*(const Versor& a, const Versor& b) {
  return Versor(a.mv_ * b.mv_, a.parity_ ^ b.parity_,
                a.norm_sign_ * b.norm_sign_);
}

Versor exp_bivector(const Multivector& bivector, double theta, double eps) {
  if (!is_homogeneous_grade(bivector, 2, eps)) {
    throw Error(ErrorCode::kNotABivector,
                to_string(bivector) + " is not a pure bivector");
  }
  const Multivector sq = bivector * bivector;
  if (!is_homogeneous_grade(sq, 0, eps) ||
      std::abs(sq.scalar_part() + 1.0) > eps) {
    throw Error(ErrorCode::kNotABivector,
                to_string(bivector) + " does not square to -1");
  }
  const Multivector r =
      Multivector::scalar(bivector.signature(), std::cos(theta)) +
      bivector * std::sin(theta);
  return Versor::from_multivector(r, eps);
}

Multivector sandwich(const Multivector& v, const Versor& a, double eps) {
  if (!is_homogeneous_grade(v, 1, eps)) {
    throw Error(ErrorCode::kInvalidArgument,
                to_string(v) + " is not a grade-1 vector");
  }
  // reverse(A) * norm_sign is A^{-1}; for Euclidean versors that is just
  // reverse(A).
  Multivector out = a.inverse().mv() * v * a.mv();
  if (a.parity() == Parity::kOdd) out *= -1.0;
  return grade_project(out, 1);
}

static double require_nonnull(const Multivector& v, const Multivector& alpha,
                              double eps) {
  if (!is_homogeneous_grade(v, 1, eps) || !is_homogeneous_grade(alpha, 1, eps)) {
    throw Error(ErrorCode::kInvalidArgument, "reflection needs grade-1 inputs");
  }
  const double aa = dot(alpha, alpha);
  if (std::abs(aa) <= eps) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot reflect in zero or null vector " + to_string(alpha));
  }
  return aa;
}

Multivector reflect(const Multivector& v, const Multivector& alpha, double eps) {
  const double aa = require_nonnull(v, alpha, eps);
  return v - alpha * (2.0 * dot(v, alpha) / aa);
}

Multivector reflect_by_product(const Multivector& v, const Multivector& alpha,
                               double eps) {
  const double aa = require_nonnull(v, alpha, eps);
  return grade_project(-(alpha * v * alpha), 1) / aa;
}

}  // namespace versorlab

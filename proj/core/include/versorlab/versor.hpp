#pragma once

#include <span>

#include "versorlab/multivector.hpp"

namespace versorlab {

enum class Parity { kEven, kOdd };

constexpr Parity operator^(Parity a, Parity b) noexcept {
  return a == b ? Parity::kEven : Parity::kOdd;
}

// A multivector that is a product of unit vectors: A * reverse(A) = +-1 and
// support only on blades of one parity.
class Versor {
 public:
  // Validates parity and normalization; throws kNonUnitVersor otherwise.
  static Versor from_multivector(const Multivector& mv, double eps = kEpsilon);
  // Product of the given vectors, each normalized to unit magnitude first.
  static Versor from_vectors(std::span<const Multivector> vectors,
                             double eps = kEpsilon);
  static Versor identity(Signature sig);

  const Multivector& mv() const noexcept { return mv_; }
  Parity parity() const noexcept { return parity_; }
  Signature signature() const noexcept { return mv_.signature(); }
  // Scalar A * reverse(A); +1 throughout Cl(n,0), may be -1 in mixed
  // signature.
  double norm_sign() const noexcept { return norm_sign_; }

  Versor inverse() const;
  Versor negated() const;

  // Group product. No renormalization: unit versors are closed under it.
  friend Versor operator*(const Versor& a, const Versor& b);

 private:
  Versor(Multivector mv, Parity parity, double norm_sign)
      : mv_(std::move(mv)), parity_(parity), norm_sign_(norm_sign) {}

  Multivector mv_;
  Parity parity_;
  double norm_sign_;
};

// cos(theta) + B sin(theta) for a unit bivector B (B*B = -1).
Versor exp_bivector(const Multivector& bivector, double theta,
                    double eps = kEpsilon);

// Action of a versor on a grade-1 vector: reverse(A) v A for even A,
// -reverse(A) v A for odd A. Normalized by the inverse so that versors with
// A*reverse(A) = -1 act correctly too.
Multivector sandwich(const Multivector& v, const Versor& a,
                     double eps = kEpsilon);

// Reflection of v in the hyperplane orthogonal to alpha via
// v - 2 (v|alpha)/(alpha|alpha) alpha.
Multivector reflect(const Multivector& v, const Multivector& alpha,
                    double eps = kEpsilon);

// -alpha v alpha / (alpha|alpha), the same reflection via the geometric
// product.
Multivector reflect_by_product(const Multivector& v, const Multivector& alpha,
                               double eps = kEpsilon);

}  // namespace versorlab

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace versorlab {

// Default comparison tolerance for coefficients.
inline constexpr double kEpsilon = 1e-9;
// Grid used when quantizing coefficients for hashing and canonical ordering.
inline constexpr double kHashGrid = 1e-6;

struct Precision {
  double eps = kEpsilon;
  double grid = kHashGrid;
};

// Bit i set means basis vector e_{i+1} is a factor of the blade.
using BladeMask = std::uint32_t;

// Metric signature of Cl(p,q). Basis vector i squares to +1 for i < p,
// otherwise to -1.
class Signature {
 public:
  static constexpr int kMaxDimension = 8;

  constexpr Signature() = default;
  Signature(int p, int q);

  constexpr int p() const noexcept { return p_; }
  constexpr int q() const noexcept { return q_; }
  constexpr int dimension() const noexcept { return p_ + q_; }
  constexpr std::size_t blade_count() const noexcept {
    return std::size_t{1} << dimension();
  }
  constexpr int metric(int i) const noexcept { return i < p_ ? 1 : -1; }

  friend constexpr bool operator==(Signature, Signature) = default;

 private:
  int p_ = 0;
  int q_ = 0;
};

constexpr int grade_of(BladeMask blade) noexcept {
  return __builtin_popcount(blade);
}

// Sign picked up by e_a * e_b from reordering and from the metric.
int blade_product_sign(BladeMask a, BladeMask b, Signature sig) noexcept;

// Dense multivector over all 2^(p+q) blades of Cl(p,q).
class Multivector {
 public:
  static constexpr std::size_t kMaxBlades = std::size_t{1}
                                            << Signature::kMaxDimension;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double value);
  static Multivector blade(Signature sig, BladeMask mask, double coeff = 1.0);
  static Multivector basis_vector(Signature sig, int index);
  // Grade-1 multivector from coordinates along e_1..e_n.
  static Multivector vector(Signature sig, std::span<const double> coords);
  static Multivector vector(Signature sig, std::initializer_list<double> coords);

  Signature signature() const noexcept { return sig_; }
  std::size_t blade_count() const noexcept { return sig_.blade_count(); }

  double operator[](BladeMask mask) const { return coeffs_[mask]; }
  void set(BladeMask mask, double value) { coeffs_[mask] = value; }
  std::span<const double> coefficients() const {
    return {coeffs_.data(), blade_count()};
  }

  double scalar_part() const noexcept { return coeffs_[0]; }
  // Coordinates of the grade-1 part along e_1..e_n.
  std::vector<double> vector_coords() const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

 private:
  Signature sig_;
  std::array<double, kMaxBlades> coeffs_{};
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

// Grade-k part multiplied by (-1)^(k(k-1)/2).
Multivector reverse(const Multivector& a);

// Blades of popcount k only.
Multivector grade_project(const Multivector& a, int k);

// Support tests: every coefficient outside the named grades is below eps.
bool is_homogeneous_grade(const Multivector& a, int k, double eps = kEpsilon);
bool is_even(const Multivector& a, double eps = kEpsilon);
bool is_odd(const Multivector& a, double eps = kEpsilon);
bool is_zero(const Multivector& a, double eps = kEpsilon);

// Symmetric scalar product of the grade-1 parts, (a|b) = 1/2 (ab + ba).
double dot(const Multivector& a, const Multivector& b);
// Scalar part of a * reverse(a).
double norm_squared(const Multivector& a);
// Euclidean norm of the coefficient vector (magnitude of a grade-1 vector in
// a positive-definite metric).
double coefficient_norm(const Multivector& a);

bool approx_equal(const Multivector& a, const Multivector& b,
                  double eps = kEpsilon);

// "1", "e1", "e12", "e134", ...
std::string blade_name(BladeMask mask);
// Inverse of blade_name; throws on malformed input.
BladeMask parse_blade_name(std::string_view name, Signature sig);

// Human-readable sum, e.g. "0.5 - 0.5e12 + 0.5e23". Coefficients below eps
// are dropped.
std::string to_string(const Multivector& a, double eps = kEpsilon);

}  // namespace versorlab

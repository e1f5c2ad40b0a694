#include "versorlab/multivector.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "versorlab/error.hpp"

namespace versorlab {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q > kMaxDimension) {
    throw Error(ErrorCode::kInvalidArgument,
                "signature (" + std::to_string(p) + "," + std::to_string(q) +
                    ") outside 0 <= p+q <= 8");
  }
}

int blade_product_sign(BladeMask a, BladeMask b, Signature sig) noexcept {
  // Each basis vector of b must hop over the vectors of a with larger index.
  int swaps = 0;
  for (BladeMask rest = a >> 1; rest != 0; rest >>= 1) {
    swaps += __builtin_popcount(rest & b);
  }
  int sign = (swaps & 1) ? -1 : 1;
  // Negative-square basis vectors occupy indices p..p+q-1.
  const BladeMask negative = ((BladeMask{1} << sig.dimension()) - 1) &
                             ~((BladeMask{1} << sig.p()) - 1);
  if (__builtin_popcount(a & b & negative) & 1) sign = -sign;
  return sign;
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(Signature sig, BladeMask mask, double coeff) {
  if (mask >= sig.blade_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "blade " + blade_name(mask) + " outside signature");
  }
  Multivector m(sig);
  m.coeffs_[mask] = coeff;
  return m;
}

Multivector Multivector::basis_vector(Signature sig, int index) {
  if (index < 0 || index >= sig.dimension()) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis vector index " + std::to_string(index) + " out of range");
  }
  return blade(sig, BladeMask{1} << index);
}

Multivector Multivector::vector(Signature sig, std::span<const double> coords) {
  if (coords.size() != static_cast<std::size_t>(sig.dimension())) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(sig.dimension()) +
                    " coordinates, got " + std::to_string(coords.size()));
  }
  Multivector m(sig);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    m.coeffs_[BladeMask{1} << i] = coords[i];
  }
  return m;
}

Multivector Multivector::vector(Signature sig,
                                std::initializer_list<double> coords) {
  return vector(sig, std::span<const double>(coords.begin(), coords.size()));
}

std::vector<double> Multivector::vector_coords() const {
  std::vector<double> out(static_cast<std::size_t>(sig_.dimension()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeffs_[BladeMask{1} << i];
  }
  return out;
}

static void require_same_signature(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature()) {
    throw Error(ErrorCode::kSignatureMismatch,
                "multivectors of signatures (" +
                    std::to_string(a.signature().p()) + "," +
                    std::to_string(a.signature().q()) + ") and (" +
                    std::to_string(b.signature().p()) + "," +
                    std::to_string(b.signature().q()) + ")");
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_signature(*this, other);
  for (std::size_t i = 0; i < blade_count(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_signature(*this, other);
  for (std::size_t i = 0; i < blade_count(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (std::size_t i = 0; i < blade_count(); ++i) coeffs_[i] *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (std::size_t i = 0; i < blade_count(); ++i) coeffs_[i] /= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature sig = a.sig_;
  const std::size_t n = sig.blade_count();
  Multivector out(sig);
  for (BladeMask i = 0; i < n; ++i) {
    const double ai = a.coeffs_[i];
    if (ai == 0.0) continue;
    for (BladeMask j = 0; j < n; ++j) {
      const double bj = b.coeffs_[j];
      if (bj == 0.0) continue;
      out.coeffs_[i ^ j] += blade_product_sign(i, j, sig) * ai * bj;
    }
  }
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return a * b;
}

Multivector reverse(const Multivector& a) {
  Multivector out = a;
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    const int k = grade_of(i);
    if ((k * (k - 1) / 2) % 2 == 1) out.set(i, -a[i]);
  }
  return out;
}

Multivector grade_project(const Multivector& a, int k) {
  Multivector out(a.signature());
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (grade_of(i) == k) out.set(i, a[i]);
  }
  return out;
}

bool is_homogeneous_grade(const Multivector& a, int k, double eps) {
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (grade_of(i) != k && std::abs(a[i]) > eps) return false;
  }
  return true;
}

bool is_even(const Multivector& a, double eps) {
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (grade_of(i) % 2 == 1 && std::abs(a[i]) > eps) return false;
  }
  return true;
}

bool is_odd(const Multivector& a, double eps) {
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (grade_of(i) % 2 == 0 && std::abs(a[i]) > eps) return false;
  }
  return true;
}

bool is_zero(const Multivector& a, double eps) {
  for (double c : a.coefficients()) {
    if (std::abs(c) > eps) return false;
  }
  return true;
}

double dot(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature sig = a.signature();
  double sum = 0.0;
  for (int i = 0; i < sig.dimension(); ++i) {
    const BladeMask m = BladeMask{1} << i;
    sum += sig.metric(i) * a[m] * b[m];
  }
  return sum;
}

double norm_squared(const Multivector& a) {
  // Scalar part of a * reverse(a) without forming the full product.
  const Signature sig = a.signature();
  double sum = 0.0;
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (a[i] == 0.0) continue;
    const int k = grade_of(i);
    const int rev = (k * (k - 1) / 2) % 2 == 1 ? -1 : 1;
    sum += rev * blade_product_sign(i, i, sig) * a[i] * a[i];
  }
  return sum;
}

double coefficient_norm(const Multivector& a) {
  double sum = 0.0;
  for (double c : a.coefficients()) sum += c * c;
  return std::sqrt(sum);
}

bool approx_equal(const Multivector& a, const Multivector& b, double eps) {
  if (a.signature() != b.signature()) return false;
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    if (std::abs(a[i] - b[i]) > eps) return false;
  }
  return true;
}

std::string blade_name(BladeMask mask) {
  if (mask == 0) return "1";
  std::string name = "e";
  for (int i = 0; i < Signature::kMaxDimension; ++i) {
    if (mask & (BladeMask{1} << i)) name += static_cast<char>('1' + i);
  }
  return name;
}

BladeMask parse_blade_name(std::string_view name, Signature sig) {
  if (name == "1") return 0;
  if (name.size() < 2 || name[0] != 'e') {
    throw Error(ErrorCode::kParseError,
                "malformed blade name '" + std::string(name) + "'");
  }
  BladeMask mask = 0;
  int last = 0;
  for (char c : name.substr(1)) {
    const int idx = c - '0';
    if (idx < 1 || idx > sig.dimension() || idx <= last) {
      throw Error(ErrorCode::kParseError,
                  "blade name '" + std::string(name) +
                      "' must list ascending indices within the signature");
    }
    mask |= BladeMask{1} << (idx - 1);
    last = idx;
  }
  return mask;
}

std::string to_string(const Multivector& a, double eps) {
  std::ostringstream out;
  bool first = true;
  for (BladeMask i = 0; i < a.blade_count(); ++i) {
    const double c = a[i];
    if (std::abs(c) <= eps) continue;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", std::abs(c));
    const bool unit = i != 0 && std::abs(std::abs(c) - 1.0) <= eps;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (!unit) out << buf;
    if (i != 0) out << blade_name(i);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace versorlab

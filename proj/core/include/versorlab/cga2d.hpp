#pragma once

#include <string>
#include <string_view>

#include "versorlab/versor.hpp"

// Conformal model of the plane in Cl(3,1) with basis (e1, e2, e, ebar),
// e^2 = 1, ebar^2 = -1, n = e + ebar, nbar = e - ebar, N = e ebar.
namespace versorlab::cga {

inline const Signature kSignature{3, 1};

Multivector e1();
Multivector e2();
Multivector e();
Multivector ebar();
Multivector n();
Multivector nbar();
Multivector N();

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

// Null grade-1 vector normalized to X.n = -1.
class ConformalPoint {
 public:
  // Rescales a null vector to X.n = -1. Throws kPointAtInfinity when
  // |X.n| <= eps |X|.
  static ConformalPoint from_null_vector(const Multivector& x, double eps = kEpsilon);

  const Multivector& X() const noexcept { return x_; }

 private:
  explicit ConformalPoint(Multivector x) : x_(std::move(x)) {}
  Multivector x_;
};

// x^2 n + 2x - nbar, unnormalized (X.n = -2).
Multivector conformal_lift(double x1, double x2);

// conformal_lift scaled to X.n = -1.
ConformalPoint embed(double x1, double x2);
ConformalPoint embed(Point2 x);

// Inverse of embed for any nonzero multiple of a conformal point. Throws
// kPointAtInfinity if X.n vanishes.
Point2 extract(const Multivector& x, double eps = kEpsilon);
Point2 extract(const ConformalPoint& x, double eps = kEpsilon);

enum class ConformalKind {
  kTranslation,
  kRotation,
  kDilation,
  kSpecialConformal,
  kReflection,
  kInversion,
  kComposite,
};

std::string_view to_string(ConformalKind kind);

struct ConformalVersor {
  Versor versor;
  ConformalKind kind;
};

// Action X -> A X rev(A) (with a minus sign for odd A), the ordering in which
// T_a = 1 + na/2 translates by +a. Total: the result may be a point at
// infinity.
Multivector transform(const ConformalVersor& a, const Multivector& x,
                      double eps = kEpsilon);
ConformalPoint apply(const ConformalVersor& a, const ConformalPoint& x,
                     double eps = kEpsilon);
// "b after a".
ConformalVersor compose(const ConformalVersor& a, const ConformalVersor& b);

// 1 + n a / 2; x -> x + a.
ConformalVersor translator(double a1, double a2);
// exp(-e12 phi/2); rotates the plane counterclockwise by phi.
ConformalVersor rotor(double phi);
// cosh(alpha/2) + sinh(alpha/2) N; scales points by exp(-alpha).
ConformalVersor dilator(double alpha);
// 1 - nbar a / 2 = e T_a e; inversion, translation by a, inversion.
ConformalVersor special_conformal(double a1, double a2);
// Unit vector a in the plane; x -> reflection in the line orthogonal to a.
ConformalVersor reflection(double a1, double a2);
// The odd versor e; x -> x / x^2.
ConformalVersor inversion_versor();

// e1 e; tau -> -1/tau under tau = e1 x.
ConformalVersor modular_S();
// 1 + n e1 / 2; tau -> tau + 1.
ConformalVersor modular_T();
// 1 - n e1 / 2; tau -> tau - 1.
ConformalVersor modular_T_inverse();

// Word over {S, T, t} with t = T^-1, applied left to right. Empty is the
// identity.
class ModularWord {
 public:
  // Throws kParseError on other letters.
  static ModularWord parse(std::string_view letters);

  const std::string& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }

 private:
  explicit ModularWord(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

// Single versor equal to applying the letters left to right.
ConformalVersor word_versor(const ModularWord& word);

// Fold of versor actions over the word, normalizing after each letter.
// Requires tau.x2 > 0; throws kPointAtInfinity if an intermediate point is
// the origin mapped by S.
Point2 apply_word(const ModularWord& word, Point2 tau, double eps = kEpsilon);

// Complex Mobius arithmetic on x1 + i x2: T -> tau + 1, t -> tau - 1,
// S -> -1/tau.
Point2 mobius_apply(const ModularWord& word, Point2 tau, double eps = kEpsilon);

struct ModularComparison {
  Point2 input;
  std::string word;
  Point2 versor_result;
  Point2 oracle_result;
  // Largest coordinate difference relative to max(1, |oracle|).
  double max_deviation = 0.0;
};

ModularComparison compare_with_oracle(const ModularWord& word, Point2 tau,
                                      double eps = kEpsilon);

}  // namespace versorlab::cga

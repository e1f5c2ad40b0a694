#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "versorlab/root_system.hpp"
#include "versorlab/versor_group.hpp"

namespace versorlab {

// Even element of Cl(3,0) read as a 4D vector along the blades
// (1, Ie1, Ie2, Ie3) = (1, e23, e31, e12).
struct SpinorAs4DVector {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  static SpinorAs4DVector from_multivector(const Multivector& r,
                                           double eps = kEpsilon);
  Multivector to_multivector() const;
  // Grade-1 vector of Cl(4,0) with the same coordinates.
  Multivector to_4d_vector() const;
  std::array<double, 4> coords() const { return {a0, a1, a2, a3}; }
};

// 1/2 (R1 rev(R2) + R2 rev(R1)) for even R1, R2 in Cl(3,0).
double spinor_inner(const Multivector& r1, const Multivector& r2,
                    double eps = kEpsilon);

struct InducedRootSystem4D {
  RootSystem base;
  VersorGroup source_group;
  std::string identification;
};

// Reads each element of a Cl(3,0) spin group as a 4D vector, verifies both
// root-system axioms and identifies the result. Throws kAxiomViolation if
// the axioms fail.
InducedRootSystem4D induce_4d(const VersorGroup& g, const Precision& precision = {});

// The 4D reflection of r2 in r1, computed as r2 - 2(r1,r2)/(r1,r1) r1 and as
// -r1 rev(r2) r1. Throws kWitnessMismatch if the two disagree and
// kNotInGroup if the result is not an element of g.
Versor reflection_closure_witness(const VersorGroup& g, const Versor& r1,
                                  const Versor& r2, double eps = kEpsilon);

// Label from {A1^4, D4, F4, H4} by root count and the sorted multiset of
// pairwise inner products. Throws kUnidentified otherwise.
std::string identify_4d(const RootSystem& roots4d, const Precision& precision = {});
std::string identify_4d(const InducedRootSystem4D& induced,
                        const Precision& precision = {});

struct SymmetrySweepOptions {
  // Empty: every pair in G x G. Otherwise that many pairs drawn uniformly.
  std::optional<std::size_t> sampled_pairs;
  std::uint64_t seed = 42;
};

struct SymmetryReport {
  std::size_t group_order = 0;
  // |G|^2, the size of the left-right action set before the kernel.
  std::size_t nominal_pairs = 0;
  std::size_t pairs_tested = 0;
  bool exhaustive = false;
  // Number of distinct root permutations seen among the tested pairs.
  std::size_t distinct_permutations = 0;
  // Pure left and pure right multiplication were checked separately.
  bool left_closed = false;
  bool right_closed = false;
};

// Checks that X -> L X R permutes the induced roots for (L, R) in G x G, and
// that X -> L X and X -> X R do so on their own. Throws kAxiomViolation
// naming the first failing pair.
SymmetryReport spinorial_automorphisms(const InducedRootSystem4D& r,
                                       const SymmetrySweepOptions& options = {});

}  // namespace versorlab

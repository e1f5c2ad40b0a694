#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "versorlab/versor_group.hpp"

namespace versorlab {

struct IrrepDims {
  std::vector<int> dims;  // ascending
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  // When -1 is an element: irreps on which -1 acts trivially (those of the
  // sign quotient) and the spinorial ones on which it acts as -1.
  std::vector<int> quotient_dims;
  std::vector<int> spinorial_dims;

  int sum() const;
  long sum_of_squares() const;
};

// |G / [G,G]|, with [G,G] generated by all a b a^-1 b^-1.
std::size_t abelianization_order(const VersorGroup& g);

// Irrep dimensions from class counts, linear-character counts and sums of
// squares. If -1 is an element the solve runs twice: irreps of G/{+-1}
// (one per class of the quotient, |G/([G,G]{+-1})| linear ones, squares
// summing to |G|/2) and spinorial irreps (the remaining classes and linear
// characters, squares summing to |G|/2). Otherwise one solve over G.
// Throws kAmbiguousIrreps listing the candidates when a solve is not unique.
IrrepDims irrep_dimensions(const VersorGroup& g);

// Multisets with class_count entries, exactly linear_count ones, every other
// entry >= 2, squares summing to group_order.
std::vector<std::vector<int>> irrep_dimension_candidates(std::size_t square_sum,
                                                         std::size_t class_count,
                                                         std::size_t linear_count);

struct McKayRow {
  std::string three_d;
  std::string four_d;
  std::string lie;     // finite Lie-type system whose Coxeter number is used
  std::string affine;  // affine label of the McKay graph
  std::size_t phi_count = 0;
  int sum_dims = 0;
  std::size_t coxeter_h = 0;
  IrrepDims irreps;
  std::size_t spin_order = 0;
  std::size_t induced_roots = 0;
};

// The four rows A1^3, A3, B3, H3. Throws kMcKayMismatch naming the row if
// |Phi|, sum of irrep dimensions, and Coxeter number disagree.
std::vector<McKayRow> mckay_table();

}  // namespace versorlab

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "versorlab/multivector.hpp"

namespace versorlab {

struct RootClosureOptions {
  std::size_t max_roots = 10000;
  std::size_t max_sweeps = 100;
  Precision precision{};
};

// Finite set of unit grade-1 roots, canonically sorted. simple_roots keep the
// lengths they were given so Cartan matrices of non-simply-laced systems stay
// integral; roots themselves are normalized.
struct RootSystem {
  Signature sig;
  std::vector<Multivector> roots;
  std::vector<Multivector> simple_roots;
  std::optional<std::string> name;

  std::size_t size() const noexcept { return roots.size(); }
  std::size_t rank() const noexcept { return simple_roots.size(); }
};

// Smallest set containing the normalized simple roots and their negatives
// that is closed under reflection in each of its members.
RootSystem close_roots(const std::vector<Multivector>& simple_roots,
                       const RootClosureOptions& options = {});

struct AxiomReport {
  bool unit_norm = true;
  // Only +-alpha among scalar multiples of alpha.
  bool axiom1 = true;
  // Closed under reflections.
  bool axiom2 = true;
  // First counterexample, indices into rs.roots; for a missing -alpha the
  // second index equals the first.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  std::string detail;

  bool ok() const noexcept { return unit_norm && axiom1 && axiom2; }
};

AxiomReport check_axioms(const RootSystem& rs, const Precision& precision = {});

// A_ij = 2(a_i|a_j)/(a_j|a_j), row-major.
struct CartanMatrix {
  std::size_t n = 0;
  std::vector<double> entries;

  double operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
  bool is_symmetric(double eps = kEpsilon) const;
};

CartanMatrix cartan_matrix(const RootSystem& rs);

// Coxeter-Dynkin link between simple roots i and j (0-based) at angle
// pi - pi/m.
struct DiagramEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  int m = 3;

  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

// Orthogonal pairs are omitted. Throws kDegenerateAngle if an angle is not
// pi/m for an integer 2 <= m <= 1000.
std::vector<DiagramEdge> diagram(const RootSystem& rs,
                                 double angle_tolerance = 1e-6);

// Builds a RootSystem from an explicit root list (no closure); used for
// axiom checks on hand-built sets and for induced systems.
RootSystem make_root_system(Signature sig, std::vector<Multivector> roots,
                            std::vector<Multivector> simple_roots = {},
                            std::optional<std::string> name = std::nullopt,
                            double grid = kHashGrid);

// Simple roots picked out by a generic linear functional: the positive roots
// whose reflection permutes the remaining positive roots.
std::vector<Multivector> extract_simple_roots(const RootSystem& rs,
                                              const Precision& precision = {});

}  // namespace versorlab

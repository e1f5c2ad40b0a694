#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "versorlab/blade_key.hpp"
#include "versorlab/root_system.hpp"
#include "versorlab/versor.hpp"

namespace versorlab {

enum class GroupKind { kPin, kSpin };
enum class QuotientKind { kReflection, kRotation };

std::string_view to_string(GroupKind kind);
std::string_view to_string(QuotientKind kind);

struct GroupClosureOptions {
  std::size_t max_elements = 20000;
  Precision precision{};
};

// Finite multiplicative group of unit versors, canonically sorted. Both A and
// -A are distinct elements.
class VersorGroup {
 public:
  VersorGroup(GroupKind kind, std::vector<Versor> elements, RootSystem source,
              double grid = kHashGrid);

  GroupKind kind() const noexcept { return kind_; }
  const std::vector<Versor>& elements() const noexcept { return elements_; }
  const RootSystem& source() const noexcept { return source_; }
  Signature signature() const noexcept { return source_.sig; }
  std::size_t order() const noexcept { return elements_.size(); }
  double grid() const noexcept { return index_.grid(); }

  bool contains(const Multivector& mv) const { return index_.contains(mv); }
  // Position in elements(), or -1.
  std::ptrdiff_t index_of(const Multivector& mv) const { return index_.find(mv); }

 private:
  GroupKind kind_;
  std::vector<Versor> elements_;
  RootSystem source_;
  KeyIndex index_;
};

// Multiplicative closure of an explicit generating set. Exposed for callers
// that build groups outside the root-system route (commutator subgroups).
std::vector<Versor> close_under_products(const std::vector<Versor>& generators,
                                         const GroupClosureOptions& options = {});

// Free products of root vectors.
VersorGroup generate_pin(const RootSystem& rs,
                         const GroupClosureOptions& options = {});
// Closure of pairwise products of root vectors.
VersorGroup generate_spin(const RootSystem& rs,
                          const GroupClosureOptions& options = {});

struct ConjugacyClass {
  Versor representative;
  std::vector<Versor> members;
  std::size_t size() const noexcept { return members.size(); }
};

// Orbits of x -> g^{-1} x g, ordered by size and then canonical
// representative (the lexicographically smallest member).
std::vector<ConjugacyClass> conjugacy_classes(const VersorGroup& g);

// For each class, the index of the class holding the inverses of its members.
std::vector<std::size_t> inverse_pairing(const VersorGroup& g,
                                         const std::vector<ConjugacyClass>& classes);

struct QuotientClass {
  Versor representative;
  std::vector<Versor> members;
  std::size_t size() const noexcept { return members.size(); }
};

// A group modulo {+1, -1}. Each element is stored by the representative of
// its sign pair whose key is larger (leading coefficient positive).
struct QuotientGroup {
  QuotientKind kind;
  std::size_t covering_order = 0;
  std::vector<Versor> elements;
  std::vector<QuotientClass> classes;

  std::size_t order() const noexcept { return elements.size(); }
};

QuotientGroup quotient_by_sign(const VersorGroup& g);

// Least k >= 1 with v^k = 1. Throws kNotInGroup if v is not an element.
std::size_t element_order(const VersorGroup& g, const Multivector& v);

// Decomposition of an element of a Spin group in Cl(3,0) as
// sign * exp(B theta) with B a unit bivector and theta in (0, pi/2].
struct ExpForm {
  Versor element;
  bool is_scalar = false;
  int sign = 1;
  std::optional<Multivector> bivector;
  double theta = 0.0;
};

std::vector<ExpForm> exp_decomposition(const VersorGroup& g);

// Order of the sandwich action of the Coxeter versor a_1 a_2 ... a_n.
std::size_t coxeter_number(const RootSystem& rs, const Precision& precision = {});

}  // namespace versorlab

namespace versorlab {

// Least k >= 1 with v^k = +-1: the order of the transformation v encodes.
std::size_t projective_order(const Versor& v, std::size_t cap = 100000,
                             double eps = kEpsilon);

}  // namespace versorlab

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "versorlab/multivector.hpp"

namespace versorlab {

// Coefficients rounded to a fixed grid. Equal keys identify multivectors for
// deduplication; key order is the canonical order of output listings.
class BladeKey {
 public:
  BladeKey(const Multivector& mv, double grid = kHashGrid);

  const std::vector<std::int64_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const BladeKey&, const BladeKey&) = default;
  friend std::strong_ordering operator<=>(const BladeKey& a,
                                          const BladeKey& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  std::vector<std::int64_t> cells_;
};

struct BladeKeyHash {
  std::size_t operator()(const BladeKey& key) const noexcept;
};

// Lexicographic order on quantized coefficients.
bool canonical_less(const Multivector& a, const Multivector& b,
                    double grid = kHashGrid);

// Membership index over a list of multivectors.
class KeyIndex {
 public:
  explicit KeyIndex(double grid = kHashGrid) : grid_(grid) {}

  // Returns true if newly inserted.
  bool insert(const Multivector& mv, std::size_t position);
  // Position of a matching multivector, or -1.
  std::ptrdiff_t find(const Multivector& mv) const;
  bool contains(const Multivector& mv) const { return find(mv) >= 0; }
  std::size_t size() const noexcept { return map_.size(); }
  double grid() const noexcept { return grid_; }

 private:
  double grid_;
  std::unordered_map<BladeKey, std::size_t, BladeKeyHash> map_;
};

}  // namespace versorlab

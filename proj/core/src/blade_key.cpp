#include "versorlab/blade_key.hpp"

#include <cmath>

namespace versorlab {

BladeKey::BladeKey(const Multivector& mv, double grid) {
  const auto coeffs = mv.coefficients();
  cells_.reserve(coeffs.size() + 1);
  // Signature participates so Cl(3,0) and Cl(2,1) values never collide.
  cells_.push_back(mv.signature().p() * 16 + mv.signature().q());
  for (double c : coeffs) cells_.push_back(std::llround(c / grid));
}

std::size_t BladeKeyHash::operator()(const BladeKey& key) const noexcept {
  // FNV-1a over the cells.
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t cell : key.cells()) {
    h ^= static_cast<std::uint64_t>(cell);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const Multivector& a, const Multivector& b, double grid) {
  return BladeKey(a, grid) < BladeKey(b, grid);
}

bool KeyIndex::insert(const Multivector& mv, std::size_t position) {
  return map_.emplace(BladeKey(mv, grid_), position).second;
}

std::ptrdiff_t KeyIndex::find(const Multivector& mv) const {
  auto it = map_.find(BladeKey(mv, grid_));
  if (it == map_.end()) return -1;
  return static_cast<std::ptrdiff_t>(it->second);
}

}  // namespace versorlab

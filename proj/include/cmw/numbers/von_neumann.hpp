#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmw/numbers/natural.hpp"

namespace cmw::numbers {

// Nested-set model of a natural: 0 = {} and S(X) = X u {X}. Members are kept
// in increasing order, so encode(n).members[k] == encode(k).
struct VonNeumannSet {
  std::vector<VonNeumannSet> members;

  std::size_t size() const noexcept { return members.size(); }
  // Total number of set nodes, 2^n for encode(n).
  std::size_t node_count() const;
  VonNeumannSet succ() const;
  // "{}" for the empty set, "{{}, {{}}}" for 2.
  std::string to_string() const;

  friend bool operator==(const VonNeumannSet&, const VonNeumannSet&) = default;
};

inline constexpr std::size_t kDefaultVonNeumannCap = 16;

// Throws CapExceeded if n > cap; the encoding grows as 2^n nodes.
VonNeumannSet von_neumann_encode(const Natural& n, std::size_t cap = kDefaultVonNeumannCap);

}  // namespace cmw::numbers

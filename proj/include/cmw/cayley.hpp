#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmw/quotient.hpp"

namespace cmw::groups {

// A labelled binary operation on {0, ..., n-1}: table[i * n + j] = i o j.
// Construction checks only shape and closure; group axioms are checked by
// verify_group_table or CayleyGroup::from_table.
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::size_t> table;

  CayleyTable() = default;
  // Throws SizeMismatch or UnknownElement.
  CayleyTable(std::vector<std::string> labels, std::vector<std::size_t> entries);

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table[a * size() + b]; }
};

struct GroupCheck {
  bool is_group = false;
  bool commutative = false;
  std::optional<std::size_t> identity;
};

// Exhaustive G1-G3 check, and whether G4 (commutativity) also holds.
GroupCheck verify_group_table(const CayleyTable& t);

class CayleyGroup {
 public:
  // Throws NotAGroup when the table fails verify_group_table.
  static CayleyGroup from_table(CayleyTable t);

  std::size_t size() const noexcept { return table_.size(); }
  std::size_t op(std::size_t a, std::size_t b) const { return table_.op(a, b); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  bool commutative() const noexcept { return commutative_; }
  const std::string& label(std::size_t a) const { return table_.elements.at(a); }
  const CayleyTable& table() const noexcept { return table_; }
  // Throws UnknownElement.
  std::size_t index_of(const std::string& label) const;

 private:
  CayleyGroup() = default;
  CayleyTable table_;
  std::size_t identity_ = 0;
  bool commutative_ = false;
  std::vector<std::size_t> inverse_;
};

inline constexpr std::size_t kMaxTabulatedDegree = 6;

// Cayley table of P_n with elements in lexicographic order and labels in
// image-list form. Throws CapExceeded for n > 6 (the table has (n!)^2 cells).
CayleyGroup symmetric_group(std::size_t n);
// Z/kZ under addition, labels "0".."k-1".
CayleyGroup cyclic_group(std::size_t k);
// Point group of the water molecule: {E, C2, sigma_v, sigma_v'}.
CayleyGroup c2v_group();

// Closed under o and inverse. Throws UnknownElement for indices outside g,
// ParameterError for an empty candidate.
bool is_subgroup(std::span<const std::size_t> candidate, const CayleyGroup& g);
// Left cosets a o H in first-appearance order of a. Throws NotASubgroup.
quotient::Partition<std::size_t> left_cosets(std::span<const std::size_t> h, const CayleyGroup& g);
// Exhaustive check of f(x o y) = f(x) * f(y); f maps g indices to h indices.
// Throws UnknownElement if f is not a total map into h.
bool is_homomorphism(std::span<const std::size_t> f, const CayleyGroup& g, const CayleyGroup& h);

}  // namespace cmw::groups

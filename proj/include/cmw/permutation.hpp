#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cmw::groups {

// A bijection of {1, ..., n} stored as its image table: image()[k] = p(k+1).
class Permutation {
 public:
  // Throws InvalidPermutation unless `image` lists each of 1..n exactly once.
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::size_t n);
  // Whitespace-separated image list, e.g. "2 3 1".
  static Permutation parse(const std::string& text);

  std::size_t size() const noexcept { return image_.size(); }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }
  // p(k) for a 1-based point k.
  std::uint32_t operator()(std::uint32_t k) const { return image_.at(k - 1); }

  bool is_identity() const;
  // +1 for even permutations, -1 for odd ones.
  int sign() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

// (p o q)(k) = p(q(k)). Throws SizeMismatch for different n.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

inline constexpr std::size_t kMaxEnumeratedDegree = 8;

// All of P_n in lexicographic image order. Throws CapExceeded for n > 8.
std::vector<Permutation> all_permutations(std::size_t n);

// Two-condition subgroup criterion on a set of permutations: closed under
// composition and inverse. Throws SizeMismatch on mixed degrees and
// ParameterError on an empty candidate.
bool is_subgroup(std::span<const Permutation> candidate);

// Left cosets a o H of a permutation subgroup H of P_n, ordered by the first
// coset representative in lexicographic order. Throws NotASubgroup.
std::vector<std::vector<Permutation>> left_cosets(std::span<const Permutation> h);

}  // namespace cmw::groups

#include "cmw/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cmw/error.hpp"

namespace cmw::groups {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size() + 1, false);
  for (const auto v : image_) {
    if (v < 1 || v > image_.size() || seen[v]) {
      throw Error(ErrorKind::InvalidPermutation, "image table is not a bijection of {1..n}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::size_t k = 0; k < n; ++k) img[k] = static_cast<std::uint32_t>(k + 1);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::uint32_t> img;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
      throw Error(ErrorKind::ParseError, "bad permutation entry '" + tok + "'");
    }
    img.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  if (img.empty()) throw Error(ErrorKind::ParseError, "empty permutation");
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != k + 1) return false;
  }
  return true;
}

int Permutation::sign() const {
  // Parity of n minus the number of cycles.
  std::vector<bool> seen(image_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t j = k; !seen[j]; j = image_[j] - 1) seen[j] = true;
  }
  return ((image_.size() - cycles) % 2 == 0) ? 1 : -1;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(image_[k]);
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::SizeMismatch, "composing permutations of different degree");
  std::vector<std::uint32_t> img(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) img[k] = p.image()[q.image()[k] - 1];
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> img(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) img[p.image()[k] - 1] = static_cast<std::uint32_t>(k + 1);
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  if (n > kMaxEnumeratedDegree) {
    throw Error(ErrorKind::CapExceeded, "P_n enumeration is capped at n <= 8");
  }
  std::vector<Permutation> out;
  std::vector<std::uint32_t> img = Permutation::identity(n).image();
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool is_subgroup(std::span<const Permutation> candidate) {
  if (candidate.empty()) throw Error(ErrorKind::ParameterError, "subgroup candidate is empty");
  const std::size_t n = candidate.front().size();
  for (const auto& p : candidate) {
    if (p.size() != n) throw Error(ErrorKind::SizeMismatch, "subgroup candidate mixes degrees");
  }
  const std::set<Permutation> members(candidate.begin(), candidate.end());
  for (const auto& a : members) {
    if (!members.contains(inverse(a))) return false;
    for (const auto& b : members) {
      if (!members.contains(compose(a, b))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Permutation>> left_cosets(std::span<const Permutation> h) {
  if (h.empty() || !is_subgroup(h)) throw Error(ErrorKind::NotASubgroup, "left cosets need a subgroup");
  const std::set<Permutation> members(h.begin(), h.end());
  std::set<Permutation> covered;
  std::vector<std::vector<Permutation>> out;
  for (const auto& a : all_permutations(h.front().size())) {
    if (covered.contains(a)) continue;
    std::vector<Permutation> coset;
    coset.reserve(members.size());
    for (const auto& x : members) coset.push_back(compose(a, x));
    std::sort(coset.begin(), coset.end());
    covered.insert(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace cmw::groups

#include "cmw/cayley.hpp"

#include <algorithm>
#include <map>

#include "cmw/error.hpp"
#include "cmw/permutation.hpp"

namespace cmw::groups {

CayleyTable::CayleyTable(std::vector<std::string> labels, std::vector<std::size_t> entries)
    : elements(std::move(labels)), table(std::move(entries)) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n * n) {
    throw Error(ErrorKind::SizeMismatch, "Cayley table must be n x n for n labels");
  }
  for (const auto v : table) {
    if (v >= n) throw Error(ErrorKind::UnknownElement, "Cayley table entry outside the element list");
  }
}

GroupCheck verify_group_table(const CayleyTable& t) {
  GroupCheck out;
  const std::size_t n = t.size();
  if (n == 0 || t.table.size() != n * n) return out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.op(a, b) >= n) return out;
    }
  }
  // G1
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t.op(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (t.op(a, t.op(b, c)) != t.op(ab, c)) return out;
      }
    }
  }
  // G2
  std::optional<std::size_t> e;
  for (std::size_t cand = 0; cand < n && !e; ++cand) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t.op(cand, a) == a && t.op(a, cand) == a;
    if (ok) e = cand;
  }
  if (!e) return out;
  // G3
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = t.op(a, b) == *e && t.op(b, a) == *e;
    if (!found) return out;
  }
  out.is_group = true;
  out.identity = e;
  out.commutative = true;
  for (std::size_t a = 0; a < n && out.commutative; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.op(a, b) != t.op(b, a)) {
        out.commutative = false;
        break;
      }
    }
  }
  return out;
}

CayleyGroup CayleyGroup::from_table(CayleyTable t) {
  const GroupCheck check = verify_group_table(t);
  if (!check.is_group) throw Error(ErrorKind::NotAGroup, "Cayley table violates the group axioms");
  CayleyGroup g;
  g.table_ = std::move(t);
  g.identity_ = *check.identity;
  g.commutative_ = check.commutative;
  const std::size_t n = g.size();
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.op(a, b) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  return g;
}

std::size_t CayleyGroup::index_of(const std::string& label) const {
  const auto it = std::find(table_.elements.begin(), table_.elements.end(), label);
  if (it == table_.elements.end()) throw Error(ErrorKind::UnknownElement, "no group element '" + label + "'");
  return static_cast<std::size_t>(it - table_.elements.begin());
}

CayleyGroup symmetric_group(std::size_t n) {
  if (n > kMaxTabulatedDegree) throw Error(ErrorKind::CapExceeded, "P_n Cayley table is capped at n <= 6");
  const auto perms = all_permutations(n);
  std::map<Permutation, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], i);
    labels.push_back(perms[i].to_string());
  }
  std::vector<std::size_t> table(perms.size() * perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      table[i * perms.size() + j] = index.at(compose(perms[i], perms[j]));
    }
  }
  return CayleyGroup::from_table(CayleyTable(std::move(labels), std::move(table)));
}

CayleyGroup cyclic_group(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::ParameterError, "cyclic group order must be positive");
  std::vector<std::string> labels;
  std::vector<std::size_t> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = (i + j) % k;
  }
  return CayleyGroup::from_table(CayleyTable(std::move(labels), std::move(table)));
}

CayleyGroup c2v_group() {
  // Every non-identity element is an involution; the product of two distinct
  // ones is the third.
  std::vector<std::string> labels{"E", "C2", "sigma_v", "sigma_v'"};
  std::vector<std::size_t> table{
      0, 1, 2, 3,  //
      1, 0, 3, 2,  //
      2, 3, 0, 1,  //
      3, 2, 1, 0,
  };
  return CayleyGroup::from_table(CayleyTable(std::move(labels), std::move(table)));
}

namespace {

std::vector<bool> membership(std::span<const std::size_t> subset, const CayleyGroup& g) {
  std::vector<bool> in(g.size(), false);
  for (const auto a : subset) {
    if (a >= g.size()) throw Error(ErrorKind::UnknownElement, "element index outside the group");
    in[a] = true;
  }
  return in;
}

}  // namespace

bool is_subgroup(std::span<const std::size_t> candidate, const CayleyGroup& g) {
  if (candidate.empty()) throw Error(ErrorKind::ParameterError, "subgroup candidate is empty");
  const auto in = membership(candidate, g);
  for (const auto a : candidate) {
    if (!in[g.inverse(a)]) return false;
    for (const auto b : candidate) {
      if (!in[g.op(a, b)]) return false;
    }
  }
  return true;
}

quotient::Partition<std::size_t> left_cosets(std::span<const std::size_t> h, const CayleyGroup& g) {
  if (h.empty() || !is_subgroup(h, g)) throw Error(ErrorKind::NotASubgroup, "left cosets need a subgroup");
  const auto in = membership(h, g);
  quotient::Partition<std::size_t> out;
  std::vector<bool> covered(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (covered[a]) continue;
    std::vector<std::size_t> coset;
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (in[x]) coset.push_back(g.op(a, x));
    }
    std::sort(coset.begin(), coset.end());
    for (const auto c : coset) covered[c] = true;
    out.classes.push_back(std::move(coset));
  }
  return out;
}

bool is_homomorphism(std::span<const std::size_t> f, const CayleyGroup& g, const CayleyGroup& h) {
  if (f.size() != g.size()) throw Error(ErrorKind::UnknownElement, "map is not total on the source group");
  for (const auto v : f) {
    if (v >= h.size()) throw Error(ErrorKind::UnknownElement, "map leaves the target group");
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (f[g.op(x, y)] != h.op(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace cmw::groups

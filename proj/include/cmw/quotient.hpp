#pragma once

// Equivalence relations over finite carriers and the quotient set A/~.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cmw/error.hpp"

namespace cmw::quotient {

template <class T>
using EquivalenceRelation = std::function<bool(const T&, const T&)>;

// Classes are ordered by the first appearance of a representative in the
// carrier; members keep carrier order.
template <class T>
struct Partition {
  std::vector<std::vector<T>> classes;

  std::size_t carrier_size() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.size();
    return n;
  }

  std::vector<T> carrier() const {
    std::vector<T> out;
    for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  // Index of the class holding `x`, or classes.size() when absent.
  std::size_t class_of(const T& x) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (std::find(classes[i].begin(), classes[i].end(), x) != classes[i].end()) return i;
    }
    return classes.size();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Exhaustive E1-E3 scan; O(n^3) in the carrier size.
template <class T>
bool verify_equivalence(std::span<const T> carrier, const EquivalenceRelation<T>& rel) {
  const std::size_t n = carrier.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel(carrier[i], carrier[i])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel(carrier[i], carrier[j]) != rel(carrier[j], carrier[i])) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel(carrier[i], carrier[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel(carrier[j], carrier[k]) && !rel(carrier[i], carrier[k])) return false;
      }
    }
  }
  return true;
}

template <class T>
bool verify_equivalence(const std::vector<T>& carrier, const EquivalenceRelation<T>& rel) {
  return verify_equivalence(std::span<const T>(carrier), rel);
}

template <class T>
Partition<T> partition(std::span<const T> carrier, const EquivalenceRelation<T>& rel) {
  if (!verify_equivalence(carrier, rel)) {
    throw Error(ErrorKind::NotAnEquivalence,
                "relation is not reflexive, symmetric and transitive on the carrier");
  }
  Partition<T> out;
  std::vector<bool> placed(carrier.size(), false);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (placed[i]) continue;
    std::vector<T> cls;
    for (std::size_t j = i; j < carrier.size(); ++j) {
      if (!placed[j] && rel(carrier[i], carrier[j])) {
        cls.push_back(carrier[j]);
        placed[j] = true;
      }
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

template <class T>
Partition<T> partition(const std::vector<T>& carrier, const EquivalenceRelation<T>& rel) {
  return partition(std::span<const T>(carrier), rel);
}

// "Same class" relation induced by a partition.
template <class T>
EquivalenceRelation<T> same_class(const Partition<T>& p) {
  return [p](const T& a, const T& b) {
    const std::size_t ca = p.class_of(a);
    return ca != p.classes.size() && ca == p.class_of(b);
  };
}

// True when some element relates to two distinct partners, i.e. the relation
// viewed as a set of pairs is not the graph of a function.
template <class T>
bool fails_function_test(std::span<const T> carrier, const EquivalenceRelation<T>& rel) {
  for (const auto& x : carrier) {
    std::size_t partners = 0;
    for (const auto& y : carrier) {
      if (rel(x, y)) ++partners;
    }
    if (partners > 1) return true;
  }
  return false;
}

}  // namespace cmw::quotient

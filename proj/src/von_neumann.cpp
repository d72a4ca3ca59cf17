#include "cmw/numbers/von_neumann.hpp"

#include "cmw/error.hpp"

namespace cmw::numbers {

std::size_t VonNeumannSet::node_count() const {
  std::size_t n = 1;
  for (const auto& m : members) n += m.node_count();
  return n;
}

VonNeumannSet VonNeumannSet::succ() const {
  VonNeumannSet out = *this;
  out.members.push_back(*this);
  return out;
}

std::string VonNeumannSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ", ";
    out += members[i].to_string();
  }
  out += "}";
  return out;
}

VonNeumannSet von_neumann_encode(const Natural& n, std::size_t cap) {
  if (n > Natural(cap)) {
    throw Error(ErrorKind::CapExceeded, "von Neumann encoding of " + n.to_string() + " exceeds cap " +
                                              std::to_string(cap));
  }
  VonNeumannSet s;
  const std::uint64_t count = n.to_u64();
  for (std::uint64_t k = 0; k < count; ++k) s = s.succ();
  return s;
}

}  // namespace cmw::numbers

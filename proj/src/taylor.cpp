#include "cmw/analysis/taylor.hpp"

#include <algorithm>
#include <string>

namespace cmw::analysis {

std::vector<IndexPath> index_paths(std::size_t n, std::size_t k) {
  std::vector<IndexPath> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  IndexPath path(k, 0);
  while (true) {
    out.push_back(path);
    std::size_t j = k;
    while (j-- > 0) {
      if (path[j] + 1 < n) {
        ++path[j];
        std::fill(path.begin() + static_cast<std::ptrdiff_t>(j) + 1, path.end(), 0);
        break;
      }
      if (j == 0) return out;
    }
    if (k == 0) return out;
  }
}

double taylor_eval_nd(const PathPartials& partials, std::span<const double> x0, std::span<const double> x, std::size_t m) {
  if (x0.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "x0 and x differ in dimension");
  PathPartials sorted;
  for (const auto& [path, value] : partials) {
    IndexPath key = path;
    std::sort(key.begin(), key.end());
    sorted.emplace(std::move(key), value);
  }
  const std::size_t n = x.size();
  double total = 0.0;
  double factorial = 1.0;
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    double level = 0.0;
    for (const auto& path : index_paths(n, k)) {
      IndexPath key = path;
      std::sort(key.begin(), key.end());
      const auto it = sorted.find(key);
      if (it == sorted.end()) {
        std::string name = "(";
        for (std::size_t j = 0; j < key.size(); ++j) name += (j ? "," : "") + std::to_string(key[j]);
        throw Error(ErrorKind::MissingPartial, "no partial derivative supplied for index path " + name + ")");
      }
      double prod = it->second;
      for (const auto i : path) prod *= x[i] - x0[i];
      level += prod;
    }
    total += level / factorial;
  }
  return total;
}

}  // namespace cmw::analysis

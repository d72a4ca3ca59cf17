#include "cmw/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "cmw/error.hpp"

namespace cmw::io {

using numbers::ComplexRational;
using numbers::Rational;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) fail(std::string("field \"") + name + "\" must be an array");
  return a;
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(what + " must be finite");
  return v;
}

std::size_t count(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

template <class F, class Entry>
linalg::Matrix<F> matrix_rows(const Json& j, Entry&& entry) {
  if (!j.is_array() || j.empty()) fail("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<F> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) fail("matrix rows must be non-empty arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) fail("matrix rows differ in length");
    for (const auto& e : row) entries.push_back(entry(e));
  }
  return linalg::Matrix<F>(rows, cols, std::move(entries));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::string& path) { return parse_json(read_text_file(path)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DivisionByZero) throw;
      fail("bad rational \"" + j.get<std::string>() + "\"");
    }
  }
  fail("rational entries must be integers or \"p/q\" strings");
}

ComplexRational complex_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return ComplexRational(re, im);
  }
  return ComplexRational(rational_from_json(j));
}

linalg::RationalMatrix matrix_from_json(const Json& j) {
  return matrix_rows<Rational>(j, [](const Json& e) { return rational_from_json(e); });
}

linalg::ComplexMatrix complex_matrix_from_json(const Json& j) {
  return matrix_rows<ComplexRational>(j, [](const Json& e) { return complex_from_json(e); });
}

bool matrix_json_is_complex(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) continue;
    for (const auto& e : row) {
      if (e.is_object()) return true;
    }
  }
  return false;
}

Json matrix_to_json(const linalg::RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const linalg::ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(numbers::to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

groups::CayleyTable cayley_from_json(const Json& j) {
  const Json& elems = array_field(j, "elements");
  const Json& table = array_field(j, "table");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& e : elems) {
    if (!e.is_string()) fail("group elements must be string labels");
    if (!index.emplace(e.get<std::string>(), labels.size()).second) fail("duplicate group element " + e.get<std::string>());
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::size_t> entries;
  for (const auto& row : table) {
    if (!row.is_array()) fail("table rows must be arrays");
    for (const auto& e : row) {
      if (e.is_string()) {
        const auto it = index.find(e.get<std::string>());
        if (it == index.end()) throw Error(ErrorKind::UnknownElement, "table entry " + e.get<std::string>() + " is not an element");
        entries.push_back(it->second);
      } else {
        entries.push_back(count(e, "table entry"));
      }
    }
    if (row.size() != labels.size()) throw Error(ErrorKind::SizeMismatch, "table must be n x n");
  }
  return groups::CayleyTable(std::move(labels), std::move(entries));
}

metric::FiniteMetricSpace metric_from_json(const Json& j) {
  const Json& pts = array_field(j, "points");
  const Json& dist = array_field(j, "distances");
  std::vector<std::string> ids;
  for (const auto& p : pts) {
    if (p.is_string()) {
      ids.push_back(p.get<std::string>());
    } else if (p.is_number_integer()) {
      ids.push_back(std::to_string(p.get<std::int64_t>()));
    } else {
      fail("point ids must be strings or integers");
    }
  }
  std::vector<std::vector<Rational>> d;
  for (const auto& row : dist) {
    if (!row.is_array()) fail("distance rows must be arrays");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(rational_from_json(e));
    d.push_back(std::move(r));
  }
  return metric::FiniteMetricSpace::from_matrix(std::move(ids), std::move(d));
}

measure::IntervalUnion interval_union_from_json(const Json& j) {
  if (!j.is_array()) fail("interval union must be an array of [lo, hi] pairs");
  std::vector<measure::Interval> pieces;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) fail("each interval must be a [lo, hi] pair");
    pieces.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return measure::IntervalUnion(std::move(pieces));
}

Json interval_union_to_json(const measure::IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& iv : u.intervals()) out.push_back(Json::array({iv.lo.to_string(), iv.hi.to_string()}));
  return out;
}

measure::SimpleFunction simple_function_from_json(const Json& j) {
  if (!j.is_array()) fail("simple function must be an array of {value, support} terms");
  std::vector<measure::SimpleTerm> terms;
  for (const auto& t : j) {
    terms.push_back({rational_from_json(field(t, "value")), interval_union_from_json(field(t, "support"))});
  }
  return measure::simple_canonicalize(terms);
}

analysis::SampledFunction sampled_function_from_json(const Json& j) {
  const std::size_t dim = count(field(j, "dim"), "dim");
  const Json& origin_j = array_field(j, "origin");
  const Json& shape_j = array_field(j, "shape");
  const Json& values_j = array_field(j, "values");
  if (origin_j.size() != dim || shape_j.size() != dim) fail("origin and shape must have dim entries");
  std::vector<double> origin;
  for (const auto& o : origin_j) origin.push_back(number(o, "origin entry"));
  std::vector<std::size_t> shape;
  for (const auto& s : shape_j) {
    shape.push_back(count(s, "shape entry"));
    if (shape.back() < 2) fail("every grid extent must be at least 2");
  }
  const double spacing = number(field(j, "spacing"), "spacing");
  std::vector<double> values;
  values.reserve(values_j.size());
  for (const auto& v : values_j) values.push_back(number(v, "sample value"));
  return analysis::SampledFunction(analysis::Grid(std::move(origin), spacing, std::move(shape)), std::move(values));
}

analysis::SampledFunction sampled_function_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    std::vector<double> row;
    bool numeric = true;
    for (const auto& c : cells) {
      double v = 0;
      if (!parse_double(c, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty() && cols == 0) {
        cols = cells.size();  // header
        continue;
      }
      fail("non-numeric CSV cell on line " + std::to_string(line_no));
    }
    if (cols == 0) cols = row.size();
    if (row.size() != cols) fail("CSV line " + std::to_string(line_no) + " has the wrong number of columns");
    rows.push_back(std::move(row));
  }
  if (cols < 2) fail("CSV needs at least one coordinate column and a value column");
  if (rows.empty()) fail("CSV has no data rows");
  const std::size_t dim = cols - 1;

  std::vector<std::vector<double>> axes(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (const auto& r : rows) axes[a].push_back(r[a]);
    std::sort(axes[a].begin(), axes[a].end());
    axes[a].erase(std::unique(axes[a].begin(), axes[a].end()), axes[a].end());
    if (axes[a].size() < 2) fail("every grid axis needs at least 2 distinct coordinates");
  }
  const double spacing = axes[0][1] - axes[0][0];
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t i = 1; i < axes[a].size(); ++i) {
      const double step = axes[a][i] - axes[a][i - 1];
      if (std::abs(step - spacing) > 1e-9 * std::max(1.0, std::abs(spacing))) {
        fail("CSV coordinates are not on one uniform grid spacing");
      }
    }
  }
  std::vector<double> origin(dim);
  std::vector<std::size_t> shape(dim);
  std::size_t total = 1;
  for (std::size_t a = 0; a < dim; ++a) {
    origin[a] = axes[a].front();
    shape[a] = axes[a].size();
    total *= shape[a];
  }
  if (rows.size() != total) fail("CSV rows do not form a complete grid");
  analysis::Grid grid(origin, spacing, shape);
  std::vector<double> values(total, 0.0);
  std::vector<bool> seen(total, false);
  for (const auto& r : rows) {
    std::vector<std::size_t> idx(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      idx[a] = static_cast<std::size_t>(std::lower_bound(axes[a].begin(), axes[a].end(), r[a]) - axes[a].begin());
    }
    const std::size_t flat = grid.flatten(idx);
    if (seen[flat]) fail("CSV repeats a grid point");
    seen[flat] = true;
    values[flat] = r[dim];
  }
  return analysis::SampledFunction(std::move(grid), std::move(values));
}

analysis::SampledFunction load_sampled_function(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return sampled_function_from_csv(read_text_file(path));
  }
  return sampled_function_from_json(load_json_file(path));
}

Json sampled_function_to_json(const analysis::SampledFunction& f) {
  Json j;
  j["dim"] = f.grid.dim();
  j["origin"] = f.grid.origin();
  j["spacing"] = f.grid.spacing();
  j["shape"] = f.grid.shape();
  j["values"] = f.values;
  return j;
}

}  // namespace cmw::io

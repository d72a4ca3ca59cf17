#include "cmw/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmw/analysis/norms.hpp"
#include "cmw/analysis/taylor.hpp"
#include "cmw/distributions.hpp"
#include "cmw/error.hpp"
#include "cmw/io.hpp"
#include "cmw/linalg.hpp"
#include "cmw/measure.hpp"
#include "cmw/metric.hpp"
#include "cmw/numbers/cauchy_real.hpp"
#include "cmw/numbers/rational.hpp"
#include "cmw/permutation.hpp"
#include "cmw/quotient.hpp"

namespace cmw::cli {

namespace {

using Json = nlohmann::ordered_json;
using numbers::CauchyReal;
using numbers::Rational;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result;
  Json diagnostics = Json::object();
};

using Values = std::map<std::string, std::string>;
using Action = std::function<void(const Values&, Report&)>;

// Floats are reported with 12 significant digits; non-finite values as strings.
Json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json from_plain(const io::Json& j) { return Json::parse(j.dump()); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool has(const Values& v, const std::string& key) {
  const auto it = v.find(key);
  return it != v.end() && !it->second.empty();
}

const std::string& get(const Values& v, const std::string& key) {
  const auto it = v.find(key);
  if (it == v.end() || it->second.empty()) throw UsageError("missing required option --" + key);
  return it->second;
}

// Splits on commas and (optionally) whitespace, dropping empty pieces.
std::vector<std::string> list_items(const std::string& s, bool whitespace_too = true) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : s) {
    if (c == ',' || (whitespace_too && std::isspace(static_cast<unsigned char>(c)))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(trim(text));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DivisionByZero) throw;
    throw UsageError("--" + name + ": expected a rational \"p\" or \"p/q\", got \"" + text + "\"");
  }
}

double double_arg(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw UsageError("--" + name + ": expected a finite number, got \"" + text + "\"");
  }
  return v;
}

double p_arg(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity") return analysis::kInfinity;
  return double_arg(name, t);
}

unsigned unsigned_arg(const std::string& name, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      t.size() > 9) {
    throw UsageError("--" + name + ": expected a non-negative integer, got \"" + text + "\"");
  }
  return static_cast<unsigned>(std::stoul(t));
}

std::vector<double> doubles_arg(const std::string& name, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : list_items(text)) out.push_back(double_arg(name, item));
  return out;
}

io::Json json_arg(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) return io::parse_json(t);
  return io::load_json_file(t);
}

analysis::SampledFunction sampled_arg(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return io::sampled_function_from_json(io::parse_json(t));
  return io::load_sampled_function(t);
}

// ---- numbers ---------------------------------------------------------------

// Recursive-descent evaluator for + - * / and parentheses over Q.
class RationalExpression {
 public:
  explicit RationalExpression(std::string text) : s_(std::move(text)) {}

  Rational evaluate() {
    Rational v = sum();
    skip();
    if (pos_ != s_.size()) throw UsageError("--expr: unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Rational sum() {
    Rational v = product();
    while (true) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }
  Rational product() {
    Rational v = unary();
    while (true) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }
  Rational unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    if (eat('(')) {
      Rational v = sum();
      if (!eat(')')) throw UsageError("--expr: missing ')'");
      return v;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw UsageError("--expr: expected a number at position " + std::to_string(start));
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

numbers::RationalPredicate predicate_arg(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--predicate: expected name:c, e.g. sq_ge:2");
  const std::string name = text.substr(0, colon);
  const Rational c = rational_arg("predicate", text.substr(colon + 1));
  if (name == "sq_ge") return [c](const Rational& q) { return q.sign() >= 0 && q * q >= c; };
  if (name == "cube_ge") return [c](const Rational& q) { return q * q * q >= c; };
  if (name == "ge") return [c](const Rational& q) { return q >= c; };
  throw UsageError("--predicate: unknown predicate \"" + name + "\" (known: sq_ge, cube_ge, ge)");
}

CauchyReal euler_number() {
  return CauchyReal(
      [](std::size_t k) {
        Rational sum(0), term(1);
        for (std::size_t j = 0; j <= k; ++j) {
          if (j > 0) term = term / Rational(static_cast<std::int64_t>(j));
          sum += term;
        }
        return sum;
      },
      // Tail after N terms is at most 2 / (N+1)!.
      [](const Rational& eps) {
        std::size_t n = 0;
        Rational factorial(1);
        while (Rational(2) / factorial > eps) {
          ++n;
          factorial *= Rational(static_cast<std::int64_t>(n + 1));
        }
        return n;
      });
}

CauchyReal real_arg(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "harmonic") {
    const CauchyReal h = numbers::harmonic_real();
    return param.empty() ? h : CauchyReal::constant(rational_arg("real", param)) + h;
  }
  if (name == "const") return CauchyReal::constant(rational_arg("real", param));
  if (name == "e" && param.empty()) return euler_number();
  if (name == "sqrt") {
    const Rational c = rational_arg("real", param);
    const Rational hi = c > Rational(1) ? c : Rational(1);
    return numbers::supremum_bisect([c](const Rational& q) { return q.sign() >= 0 && q * q >= c; }, Rational(0), hi, 0)
        .real;
  }
  throw UsageError("--real: unknown real \"" + text + "\" (known: harmonic[:q], const:q, sqrt:c, e)");
}

void real_approx(const Values& v, Report& r) {
  const CauchyReal x = real_arg(get(v, "real"));
  const Rational eps = rational_arg("eps", get(v, "eps"));
  const Rational q = x.approx(eps);
  r.result = {{"value", q.to_string()}, {"decimal", num(q.to_double())}};
  r.diagnostics = {{"modulus", x.modulus(eps)}, {"eps", eps.to_string()}};
}

void real_sup(const Values& v, Report& r) {
  const auto ends = list_items(get(v, "bracket"));
  if (ends.size() != 2) throw UsageError("--bracket: expected lo,hi");
  const Rational lo = rational_arg("bracket", ends[0]);
  const Rational hi = rational_arg("bracket", ends[1]);
  const unsigned steps = unsigned_arg("steps", get(v, "steps"));
  const auto b = numbers::supremum_bisect(predicate_arg(get(v, "predicate")), lo, hi, steps);
  const Rational& u = b.upper.back();
  const Rational& l = b.lower.back();
  r.result = {{"value", u.to_string()}, {"decimal", num(u.to_double())}, {"lower", l.to_string()},
              {"width", (u - l).to_string()}};
  r.diagnostics = {{"steps", steps}, {"predicate", get(v, "predicate")}};
}

void rat_eval(const Values& v, Report& r) {
  const Rational q = RationalExpression(get(v, "expr")).evaluate();
  r.result = {{"value", q.to_string()}, {"decimal", num(q.to_double())}};
}

// ---- quotient --------------------------------------------------------------

void quotient_cmd(const Values& v, Report& r) {
  std::vector<std::int64_t> carrier;
  for (const auto& item : list_items(get(v, "carrier"))) {
    try {
      std::size_t used = 0;
      carrier.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--carrier: expected integers, got \"" + item + "\"");
    }
  }
  const std::string spec = get(v, "relation");
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::int64_t k = 0;
  if (colon != std::string::npos) k = static_cast<std::int64_t>(unsigned_arg("relation", spec.substr(colon + 1)));
  quotient::EquivalenceRelation<std::int64_t> rel;
  if (name == "mod" && k > 0) {
    rel = [k](const std::int64_t& a, const std::int64_t& b) { return ((a - b) % k) == 0; };
  } else if (name == "equal") {
    rel = [](const std::int64_t& a, const std::int64_t& b) { return a == b; };
  } else if (name == "le") {
    rel = [](const std::int64_t& a, const std::int64_t& b) { return a <= b; };
  } else if (name == "near" && colon != std::string::npos) {
    rel = [k](const std::int64_t& a, const std::int64_t& b) { return (a > b ? a - b : b - a) <= k; };
  } else {
    throw UsageError("--relation: expected mod:k (k > 0), equal, le or near:k");
  }
  const auto p = quotient::partition(carrier, rel);
  Json classes = Json::array();
  for (const auto& c : p.classes) classes.push_back(c);
  r.result = {{"classes", classes}, {"class_count", p.classes.size()}};
  r.diagnostics = {{"carrier_size", carrier.size()}};
}

// ---- groups ----------------------------------------------------------------

std::vector<groups::Permutation> permutation_set(const std::string& text) {
  std::vector<groups::Permutation> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!trim(item).empty()) out.push_back(groups::Permutation::parse(item));
  }
  return out;
}

void perm_compose(const Values& v, Report& r) {
  const auto p = groups::Permutation::parse(get(v, "p"));
  const auto q = groups::Permutation::parse(get(v, "q"));
  r.result = {{"composition", groups::compose(p, q).to_string()}};
  r.diagnostics = {{"convention", "(p o q)(k) = p(q(k))"}};
}

void perm_inverse(const Values& v, Report& r) {
  const auto p = groups::Permutation::parse(get(v, "p"));
  r.result = {{"inverse", groups::inverse(p).to_string()}, {"sign", p.sign()}};
}

void perm_subgroup(const Values& v, Report& r) {
  const auto set = permutation_set(get(v, "set"));
  r.result = {{"is_subgroup", groups::is_subgroup(set)}};
  r.diagnostics = {{"size", set.size()}};
}

void perm_cosets(const Values& v, Report& r) {
  const auto set = permutation_set(get(v, "set"));
  Json cosets = Json::array();
  for (const auto& c : groups::left_cosets(set)) {
    Json members = Json::array();
    for (const auto& p : c) members.push_back(p.to_string());
    cosets.push_back(members);
  }
  r.result = {{"cosets", cosets}, {"index", cosets.size()}};
  r.diagnostics = {{"subgroup_order", set.size()}};
}

// ---- linalg ----------------------------------------------------------------

Json matrix_report(const io::Json& rows, std::size_t n_rows, std::size_t n_cols) {
  return Json{{"rows", n_rows}, {"cols", n_cols}, {"entries", from_plain(rows)}};
}

template <class M>
Json matrix_result(const M& m) {
  return matrix_report(io::matrix_to_json(m), m.rows(), m.cols());
}

void matrix_binary(const Values& v, Report& r, bool product) {
  const io::Json a = json_arg(get(v, "a"));
  const io::Json b = json_arg(get(v, "b"));
  const bool complex = io::matrix_json_is_complex(a) || io::matrix_json_is_complex(b);
  if (complex) {
    const auto x = io::complex_matrix_from_json(a);
    const auto y = io::complex_matrix_from_json(b);
    r.result = matrix_result(product ? x * y : x + y);
  } else {
    const auto x = io::matrix_from_json(a);
    const auto y = io::matrix_from_json(b);
    r.result = matrix_result(product ? x * y : x + y);
  }
  r.diagnostics = {{"field", complex ? "complex rational" : "rational"}};
}

void matrix_inv(const Values& v, Report& r) {
  const io::Json a = json_arg(get(v, "a"));
  if (io::matrix_json_is_complex(a)) {
    r.result = matrix_result(linalg::inverse(io::complex_matrix_from_json(a)));
  } else {
    r.result = matrix_result(linalg::inverse(io::matrix_from_json(a)));
  }
  r.diagnostics = {{"check", "A * inverse = I verified exactly"}};
}

template <class F>
void kernel_of(const linalg::Matrix<F>& m, Report& r) {
  Json basis = Json::array();
  for (const auto& col : linalg::kernel_basis(m)) {
    Json entries = Json::array();
    for (const auto& row : from_plain(io::matrix_to_json(col))) entries.push_back(row[0]);
    basis.push_back(entries);
  }
  const std::size_t rk = linalg::rank(m);
  r.result = {{"basis", basis}, {"rank", rk}, {"nullity", m.cols() - rk}};
}

void matrix_kernel(const Values& v, Report& r) {
  const io::Json a = json_arg(get(v, "a"));
  if (io::matrix_json_is_complex(a)) {
    kernel_of(io::complex_matrix_from_json(a), r);
  } else {
    kernel_of(io::matrix_from_json(a), r);
  }
}

void matrix_classify(const Values& v, Report& r) {
  const io::Json a = json_arg(get(v, "a"));
  const auto c = linalg::classify_matrix(io::complex_matrix_from_json(a));
  r.result = {{"symmetric", c.symmetric}, {"hermitian", c.hermitian}, {"orthogonal", c.orthogonal},
              {"unitary", c.unitary}};
}

// ---- metric ----------------------------------------------------------------

metric::CauchyPoint<Rational> point_arg(const std::string& name, const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string param = colon == std::string::npos ? "0" : text.substr(colon + 1);
  if (kind == "const") return metric::constant_point(rational_arg(name, param));
  if (kind == "harmonic") return metric::harmonic_point(rational_arg(name, param));
  throw UsageError("--" + name + ": expected const:q or harmonic:q");
}

void metric_net(const Values& v, Report& r) {
  const auto space = io::metric_from_json(json_arg(get(v, "space")));
  if (!metric::verify_metric(space)) {
    throw Error(ErrorKind::ParameterError, "distance table violates the metric axioms");
  }
  const Rational eps = rational_arg("eps", get(v, "eps"));
  const auto centers = metric::epsilon_net_greedy(space, eps);
  r.result = {{"centers", centers}, {"count", centers.size()}};
  r.diagnostics = {{"points", space.size()}, {"eps", eps.to_string()}};
}

void metric_complete_dist(const Values& v, Report& r) {
  const auto x = point_arg("x", get(v, "x"));
  const auto y = point_arg("y", get(v, "y"));
  const Rational eps = rational_arg("eps", get(v, "eps"));
  const Rational d = metric::completion_distance(x, y, eps);
  r.result = {{"distance", d.to_string()}, {"decimal", num(d.to_double())}};
  r.diagnostics = {{"eps", eps.to_string()}};
}

// ---- measure ---------------------------------------------------------------

void measure_measure(const Values& v, Report& r) {
  const auto set = io::interval_union_from_json(json_arg(get(v, "set")));
  const Rational m = measure::lebesgue_measure(set);
  r.result = {{"set", set.to_string()}, {"measure", m.to_string()}, {"decimal", num(m.to_double())}};
}

void measure_integrate(const Values& v, Report& r) {
  const auto s = io::simple_function_from_json(json_arg(get(v, "function")));
  const auto e = io::interval_union_from_json(json_arg(get(v, "over")));
  const Rational value = measure::integrate_simple(s, e);
  r.result = {{"integral", value.to_string()}, {"decimal", num(value.to_double())}};
  r.diagnostics = {{"canonical_terms", s.terms().size()}, {"over", e.to_string()}};
}

// ---- analysis --------------------------------------------------------------

void grid_diagnostics(const analysis::SampledFunction& f, Report& r) {
  r.diagnostics = {{"dim", f.grid.dim()}, {"grid_points", f.size()}, {"spacing", num(f.grid.spacing())}};
}

Json smoothness(const analysis::SmoothnessNorm& n) {
  return {{"value", num(n.total())}, {"base", num(n.base)}, {"seminorm", num(n.seminorm)}};
}

void norms_cmd(const std::string& which, const Values& v, Report& r) {
  const auto f = sampled_arg(get(v, "f"));
  if (which == "lp") {
    r.result = {{"value", num(analysis::grid_lp_norm(f, p_arg("p", get(v, "p"))))}};
  } else if (which == "cm") {
    r.result = {{"value", num(analysis::cm_norm(f, unsigned_arg("m", get(v, "m"))))}};
  } else if (which == "holder") {
    r.result = smoothness(analysis::holder_seminorm(f, double_arg("s", get(v, "s"))));
  } else if (which == "zygmund") {
    r.result = smoothness(analysis::zygmund_seminorm(f, unsigned_arg("m", get(v, "m"))));
  } else if (which == "besov") {
    analysis::BesovParams params;
    params.s = double_arg("s", get(v, "s"));
    params.p = p_arg("p", get(v, "p"));
    params.q = p_arg("q", get(v, "q"));
    params.m = unsigned_arg("m", get(v, "m"));
    params.t_levels = unsigned_arg("levels", get(v, "levels"));
    r.result = {{"value", num(analysis::besov_norm_mc(f, params))}};
  } else {
    const double value = analysis::modulus_of_continuity(f, unsigned_arg("m", get(v, "m")), p_arg("p", get(v, "p")),
                                                         double_arg("t", get(v, "t")));
    r.result = {{"value", num(value)}};
  }
  grid_diagnostics(f, r);
}

void taylor_cmd(const Values& v, Report& r) {
  if (has(v, "partials")) {
    const io::Json j = json_arg(get(v, "partials"));
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "partials must be an object mapping index paths to values");
    analysis::PathPartials partials;
    for (const auto& [key, value] : j.items()) {
      analysis::IndexPath path;
      for (const auto& item : list_items(key)) path.push_back(unsigned_arg("partials", item));
      if (!value.is_number()) throw Error(ErrorKind::ParseError, "partial values must be numbers");
      partials[path] = value.get<double>();
    }
    const auto x0 = doubles_arg("x0", get(v, "x0"));
    const auto x = doubles_arg("x", get(v, "x"));
    const unsigned m = unsigned_arg("order", get(v, "order"));
    r.result = {{"value", num(analysis::taylor_eval_nd(partials, x0, x, m))}};
    r.diagnostics = {{"mode", "multivariate"}, {"order", m}, {"factorials", "1/k! per order"}};
    return;
  }
  const auto items = list_items(get(v, "derivs"));
  if (items.empty()) throw UsageError("--derivs: at least f(x0) is required");
  const std::string bound = has(v, "bound") ? get(v, "bound") : "0";
  bool exact = true;
  std::vector<Rational> qs;
  try {
    for (const auto& item : items) qs.push_back(Rational::parse(item));
    qs.push_back(Rational::parse(trim(get(v, "x0"))));
    qs.push_back(Rational::parse(trim(get(v, "x"))));
    qs.push_back(Rational::parse(trim(bound)));
  } catch (const Error&) {
    exact = false;
  }
  const std::size_t m = items.size() - 1;
  if (exact) {
    const Rational bq = qs.back();
    const Rational xq = qs[qs.size() - 2];
    const Rational x0q = qs[qs.size() - 3];
    qs.resize(items.size());
    const auto t = analysis::taylor_eval_1d(qs, x0q, xq, bq);
    r.result = {{"value", t.value.to_string()},
                {"decimal", num(t.value.to_double())},
                {"remainder_bound", t.remainder_bound.to_string()},
                {"remainder_decimal", num(t.remainder_bound.to_double())}};
  } else {
    const auto ds = doubles_arg("derivs", get(v, "derivs"));
    const auto t = analysis::taylor_eval_1d(ds, double_arg("x0", get(v, "x0")), double_arg("x", get(v, "x")),
                                            double_arg("bound", bound));
    r.result = {{"value", num(t.value)}, {"remainder_bound", num(t.remainder_bound)}};
  }
  r.diagnostics = {{"mode", exact ? "exact" : "floating"}, {"order", m}};
}

// ---- distributions ---------------------------------------------------------

distributions::TestFunction testfn_arg(const std::string& text) {
  if (text.rfind("bump:", 0) != 0) throw UsageError("--testfn: expected bump:c,r");
  const auto parts = list_items(text.substr(5));
  if (parts.size() != 2) throw UsageError("--testfn: expected bump:c,r");
  return distributions::bump(double_arg("testfn", parts[0]), double_arg("testfn", parts[1]));
}

distributions::Evaluator function_arg(const std::string& name) {
  if (name == "one") return [](double) { return 1.0; };
  if (name == "zero") return [](double) { return 0.0; };
  if (name == "heaviside") return [](double x) { return x >= 0.0 ? 1.0 : 0.0; };
  if (name == "x") return [](double x) { return x; };
  if (name == "x2") return [](double x) { return x * x; };
  if (name == "abs") return [](double x) { return std::abs(x); };
  if (name == "sin") return [](double x) { return std::sin(x); };
  if (name == "cos") return [](double x) { return std::cos(x); };
  throw UsageError("--f: unknown function \"" + name + "\" (known: one, zero, heaviside, x, x2, abs, sin, cos)");
}

void dist_apply(const Values& v, Report& r) {
  const std::string which = get(v, "functional");
  const auto phi = testfn_arg(get(v, "testfn"));
  const unsigned order = unsigned_arg("derivative", get(v, "derivative"));
  distributions::Functional t;
  if (which == "dirac") {
    t = distributions::dirac();
  } else if (which == "pv") {
    t = distributions::principal_value(unsigned_arg("levels", get(v, "levels")));
  } else if (which == "regular") {
    t = distributions::regular(function_arg(get(v, "f")));
  } else {
    throw UsageError("--functional: expected dirac, pv or regular");
  }
  r.result = {{"value", num(distributions::distr_derivative_apply(t, order, phi))}};
  r.diagnostics = {{"support", Json::array({num(phi.lo()), num(phi.hi())})}, {"derivative_order", order}};
}

void fourier_cmd(const Values& v, Report& r) {
  const auto f = sampled_arg(get(v, "f"));
  const auto ys = doubles_arg("y", get(v, "y"));
  const auto values = distributions::fourier_quadrature_1d(f, ys);
  Json out = Json::array();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    out.push_back({{"y", num(ys[i])}, {"re", num(values[i].real())}, {"im", num(values[i].imag())}});
  }
  r.result = {{"transform", out}};
  grid_diagnostics(f, r);
  r.diagnostics["normalization"] = "(2 pi)^(-1/2)";
}

// ---- wiring ----------------------------------------------------------------

struct OptionSpec {
  const char* name;
  const char* help;
  bool required;
  const char* fallback;
};

class CommandTable {
 public:
  void leaf(CLI::App* parent, const std::string& name, const std::string& help, std::vector<OptionSpec> options,
            Action action) {
    CLI::App* app = parent->add_subcommand(name, help);
    auto values = std::make_shared<Values>();
    for (const auto& o : options) {
      (*values)[o.name] = o.fallback ? o.fallback : "";
      auto* opt = app->add_option(std::string("--") + o.name, (*values)[o.name], o.help);
      if (o.required) opt->required();
      if (o.fallback) opt->capture_default_str();
    }
    leaves_[app] = {std::move(values), std::move(action)};
  }

  // Runs the selected leaf, returning false if none was selected.
  bool dispatch(const CLI::App& root, Report& report) const {
    const CLI::App* node = &root;
    std::string name;
    while (true) {
      const auto selected = node->get_subcommands();
      if (selected.empty()) break;
      node = selected.front();
      name += (name.empty() ? "" : " ") + node->get_name();
    }
    const auto it = leaves_.find(node);
    if (it == leaves_.end()) return false;
    report.command = name;
    for (const auto* opt : node->get_options()) {
      if (opt->get_lnames().empty() || opt->get_lnames().front() == "help" || opt->count() == 0) continue;
      report.inputs[opt->get_lnames().front()] = opt->as<std::string>();
    }
    it->second.action(*it->second.values, report);
    return true;
  }

 private:
  struct Entry {
    std::shared_ptr<Values> values;
    Action action;
  };
  std::map<const CLI::App*, Entry> leaves_;
};

void add_real_commands(CommandTable& t, CLI::App* parent) {
  auto* real = parent->add_subcommand("real", "computable reals");
  real->require_subcommand(1);
  t.leaf(real, "approx", "rational approximation within eps",
         {{"real", "harmonic[:q], const:q, sqrt:c or e", true, nullptr}, {"eps", "positive rational", true, nullptr}},
         real_approx);
  t.leaf(real, "sup", "least upper bound by bisection",
         {{"bracket", "lo,hi", true, nullptr},
          {"steps", "bisection steps", true, nullptr},
          {"predicate", "sq_ge:c, cube_ge:c or ge:c", true, nullptr}},
         real_sup);
}

void add_rat_commands(CommandTable& t, CLI::App* parent) {
  auto* rat = parent->add_subcommand("rat", "exact rationals");
  rat->require_subcommand(1);
  t.leaf(rat, "eval", "evaluate an expression over Q", {{"expr", "e.g. \"1/2 + 1/3\"", true, nullptr}}, rat_eval);
}

void build(CLI::App& app, CommandTable& t) {
  app.require_subcommand(1);

  t.leaf(&app, "quotient", "partition a carrier by an equivalence relation",
         {{"carrier", "integers", true, nullptr}, {"relation", "mod:k, equal, le or near:k", true, nullptr}},
         quotient_cmd);

  auto* numbers_cmd = app.add_subcommand("numbers", "number tower");
  numbers_cmd->require_subcommand(1);
  add_real_commands(t, numbers_cmd);
  add_rat_commands(t, numbers_cmd);
  add_real_commands(t, &app);
  add_rat_commands(t, &app);

  auto* perm = app.add_subcommand("perm", "permutation groups");
  perm->require_subcommand(1);
  t.leaf(perm, "compose", "p o q", {{"p", "images, e.g. \"2 3 1\"", true, nullptr}, {"q", "images", true, nullptr}},
         perm_compose);
  t.leaf(perm, "inverse", "p^-1", {{"p", "images", true, nullptr}}, perm_inverse);
  t.leaf(perm, "subgroup", "subgroup test", {{"set", "permutations separated by ';'", true, nullptr}}, perm_subgroup);
  t.leaf(perm, "cosets", "left cosets in P_n", {{"set", "subgroup, ';'-separated", true, nullptr}}, perm_cosets);

  auto* matrix = app.add_subcommand("matrix", "exact matrices");
  matrix->require_subcommand(1);
  t.leaf(matrix, "mul", "A B", {{"a", "JSON file or literal", true, nullptr}, {"b", "JSON file or literal", true, nullptr}},
         [](const Values& v, Report& r) { matrix_binary(v, r, true); });
  t.leaf(matrix, "add", "A + B", {{"a", "JSON file or literal", true, nullptr}, {"b", "JSON file or literal", true, nullptr}},
         [](const Values& v, Report& r) { matrix_binary(v, r, false); });
  t.leaf(matrix, "inv", "A^-1", {{"a", "JSON file or literal", true, nullptr}}, matrix_inv);
  t.leaf(matrix, "kernel", "basis of ker A", {{"a", "JSON file or literal", true, nullptr}}, matrix_kernel);
  t.leaf(matrix, "classify", "symmetric / hermitian / orthogonal / unitary",
         {{"a", "JSON file or literal", true, nullptr}}, matrix_classify);

  auto* metric_cmd = app.add_subcommand("metric", "finite metric spaces");
  metric_cmd->require_subcommand(1);
  t.leaf(metric_cmd, "net", "greedy eps-net",
         {{"space", "JSON {points, distances}", true, nullptr}, {"eps", "positive rational", true, nullptr}}, metric_net);
  t.leaf(metric_cmd, "complete-dist", "distance of Cauchy points in the completion of Q",
         {{"x", "const:q or harmonic:q", true, nullptr},
          {"y", "const:q or harmonic:q", true, nullptr},
          {"eps", "positive rational", true, nullptr}},
         metric_complete_dist);

  auto* measure_cmd = app.add_subcommand("measure", "interval unions and simple functions");
  measure_cmd->require_subcommand(1);
  t.leaf(measure_cmd, "measure", "Lebesgue measure", {{"set", "JSON [[lo, hi], ...]", true, nullptr}}, measure_measure);
  t.leaf(measure_cmd, "integrate", "integral of a simple function over a set",
         {{"function", "JSON [{value, support}]", true, nullptr}, {"over", "JSON [[lo, hi], ...]", true, nullptr}},
         measure_integrate);

  auto* norms = app.add_subcommand("norms", "sampled-function norms");
  norms->require_subcommand(1);
  const OptionSpec f{"f", "sampled function (.json or .csv)", true, nullptr};
  t.leaf(norms, "lp", "grid L^p norm", {f, {"p", "1 <= p, or inf", false, "2"}},
         [](const Values& v, Report& r) { norms_cmd("lp", v, r); });
  t.leaf(norms, "cm", "C^m norm", {f, {"m", "order", false, "1"}},
         [](const Values& v, Report& r) { norms_cmd("cm", v, r); });
  t.leaf(norms, "holder", "Hoelder norm", {f, {"s", "non-integer order", false, "0.5"}},
         [](const Values& v, Report& r) { norms_cmd("holder", v, r); });
  t.leaf(norms, "zygmund", "Zygmund norm", {f, {"m", "positive order", false, "1"}},
         [](const Values& v, Report& r) { norms_cmd("zygmund", v, r); });
  t.leaf(norms, "besov", "Besov norm via moduli of continuity",
         {f,
          {"s", "smoothness", false, "0.5"},
          {"p", "1 <= p, or inf", false, "2"},
          {"q", "1 <= q, or inf", false, "2"},
          {"m", "difference order > s", false, "1"},
          {"levels", "dyadic levels", false, "8"}},
         [](const Values& v, Report& r) { norms_cmd("besov", v, r); });
  t.leaf(norms, "omega", "modulus of continuity",
         {f, {"m", "difference order", false, "1"}, {"p", "1 <= p, or inf", false, "inf"}, {"t", "radius", true, nullptr}},
         [](const Values& v, Report& r) { norms_cmd("omega", v, r); });

  t.leaf(&app, "taylor", "Taylor polynomial evaluation",
         {{"derivs", "f(x0), f'(x0), ... (1-D)", false, nullptr},
          {"x0", "expansion point (list in n-D)", true, nullptr},
          {"x", "evaluation point (list in n-D)", true, nullptr},
          {"bound", "bound M on |f^(m+1)| (1-D)", false, nullptr},
          {"partials", "JSON {\"i,j,...\": value} (n-D)", false, nullptr},
          {"order", "expansion order (n-D)", false, nullptr}},
         taylor_cmd);

  auto* dist = app.add_subcommand("dist", "distributions");
  dist->require_subcommand(1);
  t.leaf(dist, "apply", "pair a functional with a test function",
         {{"functional", "dirac, pv or regular", true, nullptr},
          {"testfn", "bump:c,r", true, nullptr},
          {"f", "density for regular: one, zero, heaviside, x, x2, abs, sin, cos", false, "one"},
          {"derivative", "distributional derivative order", false, "0"},
          {"levels", "maximum eps levels for pv", false, "30"}},
         dist_apply);

  t.leaf(&app, "fourier", "1-D Fourier transform by trapezoid quadrature",
         {{"f", "sampled function (.json or .csv)", true, nullptr}, {"y", "frequencies, comma separated", true, nullptr}},
         fourier_cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Constructive mathematics workbench", "cmw-cli");
  app.set_version_flag("--version", std::string("0.1.0"));
  CommandTable table;
  build(app, table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  try {
    if (!table.dispatch(app, report)) {
      err << app.help();
      return kExitUsage;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind_name() << ": " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  Json envelope;
  envelope["command"] = report.command;
  envelope["inputs"] = report.inputs;
  envelope["result"] = report.result;
  envelope["diagnostics"] = report.diagnostics;
  out << envelope.dump(2) << "\n";
  return kExitOk;
}

}  // namespace cmw::cli

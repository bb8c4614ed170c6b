#include "oscilab/serialization.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace oscilab {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_double: malformed number '" + s + "'");
  }
  if (!std::isfinite(x)) throw std::invalid_argument("parse_double: non-finite value");
  return x;
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (double c : p.coeffs()) arr.push_back(format_double(c));
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected array");
  std::vector<double> coeffs;
  for (const auto& e : j) coeffs.push_back(parse_double(e.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

json system_to_json(const LinearSystem& sys) {
  json j;
  j["dim"] = sys.dim;
  j["domain"] = {format_double(sys.domain_lo), format_double(sys.domain_hi)};
  json rows = json::array();
  for (const auto& row : sys.entries) {
    json cells = json::array();
    for (const auto& p : row) cells.push_back(polynomial_to_json(p));
    rows.push_back(cells);
  }
  j["entries"] = rows;
  return j;
}

LinearSystem system_from_json(const json& j) {
  LinearSystem sys;
  sys.dim = j.at("dim").get<int>();
  if (sys.dim < 1) throw std::invalid_argument("system: dim must be >= 1");
  sys.domain_lo = parse_double(j.at("domain").at(0).get<std::string>());
  sys.domain_hi = parse_double(j.at("domain").at(1).get<std::string>());
  if (!(sys.domain_lo < sys.domain_hi)) {
    throw std::invalid_argument("system: degenerate domain");
  }
  const auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != sys.dim) {
    throw std::invalid_argument("system: entries row count != dim");
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != sys.dim) {
      throw std::invalid_argument("system: entries column count != dim");
    }
    std::vector<Polynomial> cells;
    for (const auto& cell : row) cells.push_back(polynomial_from_json(cell));
    sys.entries.push_back(std::move(cells));
  }
  return sys;
}

json spec_to_json(const CounterexampleSpec& spec) {
  json j;
  json nodes = json::array();
  for (double t : spec.nodes) nodes.push_back(format_double(t));
  j["nodes"] = nodes;
  j["margin"] = format_double(spec.margin);
  j["lambda"] = format_double(spec.lambda);
  j["certificate"] = {{"lower", format_double(spec.norm_certificate.lower)},
                      {"upper", format_double(spec.norm_certificate.upper)}};
  j["a"] = polynomial_to_json(spec.a);
  if (spec.disk) {
    j["disk"] = {{"radius", format_double(spec.disk->radius)},
                 {"bound", format_double(spec.disk->bound)}};
  }
  return j;
}

CounterexampleSpec spec_from_json(const json& j) {
  CounterexampleSpec spec;
  for (const auto& e : j.at("nodes")) spec.nodes.push_back(parse_double(e.get<std::string>()));
  spec.margin = parse_double(j.at("margin").get<std::string>());
  spec.lambda = parse_double(j.at("lambda").get<std::string>());
  spec.norm_certificate.lower = parse_double(j.at("certificate").at("lower").get<std::string>());
  spec.norm_certificate.upper = parse_double(j.at("certificate").at("upper").get<std::string>());
  spec.p = Polynomial::from_roots(spec.nodes, 1.0);
  spec.a = polynomial_from_json(j.at("a"));
  if (!(spec.lambda > 0.0)) throw std::invalid_argument("spec: lambda must be > 0");
  if (!approx_equal(spec.a, spec.p * spec.lambda)) {
    throw std::invalid_argument("spec: a does not match lambda * prod(t - nodes)");
  }
  if (j.contains("disk")) {
    spec.disk = DiskCertificate{parse_double(j.at("disk").at("radius").get<std::string>()),
                                parse_double(j.at("disk").at("bound").get<std::string>())};
  }
  return spec;
}

json report_to_json(const ZeroCountReport& report) {
  json j;
  j["component"] = report.component;
  j["interval"] = {format_double(report.lo), format_double(report.hi)};
  j["count"] = report.count;
  json locs = json::array(), flags = json::array(), sus = json::array();
  for (std::size_t i = 0; i < report.locations.size(); ++i) {
    locs.push_back(format_double(report.locations[i]));
    flags.push_back(report.near_tangency[i] ? "near-tangency" : "clean");
  }
  for (double t : report.suspects) sus.push_back(format_double(t));
  j["locations"] = locs;
  j["flags"] = flags;
  j["suspects"] = sus;
  return j;
}

std::string solution_csv(const DenseSolution& sol, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("solution_csv: n_samples must be >= 1");
  std::string out = "t";
  for (int c = 1; c <= sol.dim(); ++c) out += ",x" + std::to_string(c);
  out += "\n";
  const auto [lo, hi] = sol.domain();
  for (int i = 0; i <= n_samples; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / n_samples;
    out += format_double(t);
    for (int c = 1; c <= sol.dim(); ++c) out += "," + format_double(sol.eval(t, c));
    out += "\n";
  }
  return out;
}

}  // namespace oscilab

#include "oscilab/experiment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscilab/bounds.hpp"
#include "oscilab/serialization.hpp"

namespace oscilab {

std::vector<double> make_nodes(int d, NodeStrategy strategy,
                               const std::vector<double>& explicit_nodes) {
  switch (strategy) {
    case NodeStrategy::chebyshev:
      return chebyshev_nodes(d);
    case NodeStrategy::uniform: {
      if (d < 1) throw std::invalid_argument("make_nodes: d must be >= 1");
      std::vector<double> nodes(d);
      for (int i = 1; i <= d; ++i) {
        nodes[i - 1] = -1.0 + 2.0 * static_cast<double>(i) / (d + 1);
      }
      return nodes;
    }
    case NodeStrategy::explicit_list:
      if (static_cast<int>(explicit_nodes.size()) != d) {
        throw std::invalid_argument("make_nodes: explicit list must contain exactly d nodes");
      }
      return explicit_nodes;
  }
  throw std::invalid_argument("make_nodes: unknown strategy");
}

std::vector<DemoRow> run_demo(int d_max, double margin, const IntegratorConfig& config) {
  if (d_max < 1) throw std::invalid_argument("run_demo: d_max must be >= 1");
  const double reference = scalar_zero_bound({2, 1.0, -1.0, 1.0});

  std::vector<DemoRow> rows;
  for (int d = 1; d <= d_max; ++d) {
    const CounterexampleSpec spec = make_counterexample(chebyshev_nodes(d), margin);
    const LinearSystem sys = build_system(spec);

    const ClosedFormState init = closed_form(spec, -1.0);
    const double x0[] = {init.phi1, init.phi2};
    const DenseSolution sol = integrate_linear(sys, x0, -1.0, 1.0, config);
    const ZeroCountReport numeric = count_sign_changes(sol, 2, -1.0, 1.0, 1e-12);

    DemoRow row;
    row.d = d;
    row.lambda = spec.lambda;
    row.norm_upper = spec.norm_certificate.upper;
    row.zeros_certified = certified_zero_count(spec, -1.0, 1.0);
    row.zeros_numeric = numeric.count;
    row.scalar_bound_reference = reference;

    if (row.zeros_certified != d || row.zeros_numeric != d || !(row.norm_upper < 1.0)) {
      throw std::runtime_error("run_demo: invariant failed at d = " + std::to_string(d));
    }
    rows.push_back(row);
  }
  return rows;
}

std::string demo_csv(const std::vector<DemoRow>& rows) {
  std::string out = "d,lambda,norm_upper,zeros_certified,zeros_numeric,scalar_bound_reference\n";
  for (const DemoRow& r : rows) {
    out += std::to_string(r.d) + "," + format_double(r.lambda) + "," +
           format_double(r.norm_upper) + "," + std::to_string(r.zeros_certified) + "," +
           std::to_string(r.zeros_numeric) + "," + format_double(r.scalar_bound_reference) +
           "\n";
  }
  return out;
}

namespace {

// degree <= 4 polynomial with coefficients uniform in [-1,1], rescaled so
// the certified sup over [-1,1] equals 1 at the enclosure's upper bound
Polynomial random_unit_coefficient(SplitMix64& rng) {
  std::vector<double> coeffs(5);
  for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
  Polynomial p{std::move(coeffs)};
  const Enclosure sup = sup_abs_on_interval(p, -1.0, 1.0, 1e-9);
  if (sup.upper < 1e-300) return p;  // vanishing draw; sup 0 <= 1 already
  return p * (1.0 / sup.upper);
}

}  // namespace

StressReport run_stress(int trials, int n_max, std::uint64_t seed,
                        const IntegratorConfig& config) {
  if (trials < 1) throw std::invalid_argument("run_stress: trials must be >= 1");
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("run_stress: n_max must be in [1,4]");

  StressReport report;
  report.trials = trials;
  report.seed = seed;

  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(trial));
    const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max));

    std::vector<Polynomial> coeffs;
    for (int i = 0; i < n; ++i) coeffs.push_back(random_unit_coefficient(rng));

    // random initial state on the unit sphere (Box-Muller, then normalize)
    std::vector<double> y0(n);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u1 = 1.0 - rng.next_double();  // (0, 1]
      const double u2 = rng.next_double();
      y0[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
      norm += y0[i] * y0[i];
    }
    norm = std::sqrt(norm);
    if (norm < 1e-300) {
      y0.assign(n, 0.0);
      y0[0] = 1.0;
    } else {
      for (double& v : y0) v /= norm;
    }

    const DenseSolution sol = integrate_scalar_ode(coeffs, y0, -1.0, 1.0, config);
    const ZeroCountReport zeros = count_sign_changes(sol, 1, -1.0, 1.0, 1e-12);

    const double bound = scalar_zero_bound({n, 1.0, -1.0, 1.0});
    const double ratio = static_cast<double>(zeros.count) / bound;
    report.max_observed_ratio = std::max(report.max_observed_ratio, ratio);
    if (static_cast<double>(zeros.count) > bound + 1e-12) ++report.violations;
  }
  return report;
}

std::string stress_json(const StressReport& report) {
  json j;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["max_observed_ratio"] = format_double(report.max_observed_ratio);
  j["violations"] = report.violations;
  return j.dump() + "\n";
}

}  // namespace oscilab

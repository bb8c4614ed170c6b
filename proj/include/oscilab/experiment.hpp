#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscilab/counterexample.hpp"
#include "oscilab/ode.hpp"

namespace oscilab {

/// splitmix64: portable 64-bit generator with a one-word state. Per-trial
/// substreams are derived by mixing the seed with the trial counter, so the
/// corpus is reproducible independently of evaluation order.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_double() {  // uniform in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 mixer(seed ^ (counter * 0xD1342543DE82EF95ull));
    return SplitMix64(mixer.next());
  }
};

enum class NodeStrategy { chebyshev, uniform, explicit_list };

std::vector<double> make_nodes(int d, NodeStrategy strategy,
                               const std::vector<double>& explicit_nodes = {});

/// One row of the demonstration table: the constructed system for a given d,
/// its certificate, both zero counts, and the reference bound a second-order
/// scalar equation with C = 1 on [-1,1] would obey.
struct DemoRow {
  int d = 0;
  double lambda = 0.0;
  double norm_upper = 0.0;
  int zeros_certified = 0;
  int zeros_numeric = 0;
  double scalar_bound_reference = 0.0;
};

std::vector<DemoRow> run_demo(int d_max, double margin, const IntegratorConfig& config);
std::string demo_csv(const std::vector<DemoRow>& rows);

/// Randomized check of the scalar zero-count bound: seeded random equations
/// of order <= n_max with certified |a_i| <= 1 on [-1,1]; counts must never
/// exceed the bound.
struct StressReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double max_observed_ratio = 0.0;  // count / bound
  int violations = 0;
};

StressReport run_stress(int trials, int n_max, std::uint64_t seed,
                        const IntegratorConfig& config);
std::string stress_json(const StressReport& report);

}  // namespace oscilab

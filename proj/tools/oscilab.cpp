// oscilab: construct and verify bounded 2x2 linear systems with prescribed
// zero counts, and stress-test the scalar zero-count bound.
//
// Exit codes: 0 success, 1 invariant violation, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oscilab/bounds.hpp"
#include "oscilab/counterexample.hpp"
#include "oscilab/experiment.hpp"
#include "oscilab/ode.hpp"
#include "oscilab/serialization.hpp"

namespace {

using namespace oscilab;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

NodeStrategy parse_strategy(const std::string& s) {
  if (s == "chebyshev") return NodeStrategy::chebyshev;
  if (s == "uniform") return NodeStrategy::uniform;
  if (s == "explicit-list") return NodeStrategy::explicit_list;
  throw CLI::ValidationError("--strategy", "must be chebyshev, uniform or explicit-list");
}

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_set) {
  if (seed_set) return seed;
  if (const char* env = std::getenv("OSCILAB_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return seed;
}

void print_spec_summary(const CounterexampleSpec& spec) {
  std::cout << "d = " << spec.nodes.size() << "\n"
            << "lambda = " << format_double(spec.lambda) << "\n"
            << "norm certificate: sup(|a| + |a' + a^2|) in ["
            << format_double(spec.norm_certificate.lower) << ", "
            << format_double(spec.norm_certificate.upper) << "]\n";
  if (spec.disk) {
    std::cout << "disk certificate: sup on |z| <= " << format_double(spec.disk->radius)
              << " bounded by " << format_double(spec.disk->bound) << "\n";
  }
}

void write_spec_and_system(const CounterexampleSpec& spec, const std::string& prefix) {
  write_file(prefix + ".spec.json", spec_to_json(spec).dump(2) + "\n");
  write_file(prefix + ".system.json", system_to_json(build_system(spec)).dump(2) + "\n");
  std::cout << "wrote " << prefix << ".spec.json and " << prefix << ".system.json\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded oscillating linear systems: construction and verification"};
  app.require_subcommand(1);

  int d = 1, d_max = 5, trials = 1000, n_max = 4, component = 1;
  double margin = 0.01, epsilon = 0.1, delta = 0.01;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string strategy = "chebyshev", out_path, nodes_arg, system_path, x0_arg;
  IntegratorConfig config;

  auto add_tols = [&](CLI::App* cmd) {
    cmd->add_option("--rtol", config.rtol, "relative integration tolerance");
    cmd->add_option("--atol", config.atol, "absolute integration tolerance");
  };

  // construct
  auto* construct = app.add_subcommand("construct", "build a system with d prescribed zeros");
  construct->add_option("--d", d, "number of prescribed zeros")->required();
  construct->add_option("--strategy", strategy, "chebyshev | uniform | explicit-list");
  construct->add_option("--nodes", nodes_arg, "comma-separated node list for explicit-list");
  construct->add_option("--margin", margin, "slack in the norm bound, in (0,1)");
  construct->add_option("--out", out_path, "output prefix (default: counterexample)");

  // demo
  auto* demo = app.add_subcommand("demo", "construct, certify, integrate and count for d = 1..d-max");
  demo->add_option("--d-max", d_max, "largest d")->required();
  demo->add_option("--margin", margin, "slack in the norm bound");
  demo->add_option("--out", out_path, "CSV output path (default: stdout)");
  add_tols(demo);

  // stress
  auto* stress = app.add_subcommand("stress", "randomized check of the scalar zero-count bound");
  stress->add_option("--trials", trials, "number of random equations");
  stress->add_option("--n-max", n_max, "largest equation order (1..4)");
  stress->add_option("--seed", seed, "RNG seed (env OSCILAB_SEED as fallback)")
      ->each([&](const std::string&) { seed_set = true; });
  stress->add_option("--out", out_path, "JSON output path (default: stdout)");
  add_tols(stress);

  // bound
  auto* bound = app.add_subcommand("bound", "print the zero-count bound n-1 + (n/ln 2) C (beta-alpha)");
  int bn = 1;
  double bC = 1.0, balpha = -1.0, bbeta = 1.0;
  bound->add_option("n", bn, "equation order")->required();
  bound->add_option("C", bC, "coefficient bound, >= 1")->required();
  bound->add_option("alpha", balpha, "interval start")->required();
  bound->add_option("beta", bbeta, "interval end")->required();

  // complex
  auto* complex_cmd = app.add_subcommand(
      "complex", "construct with coefficients uniformly small on a complex neighborhood");
  complex_cmd->add_option("--d", d, "number of prescribed zeros")->required();
  complex_cmd->add_option("--epsilon", epsilon, "half-width of the neighborhood, > 0");
  complex_cmd->add_option("--delta", delta, "disk smallness target, in (0,1)");
  complex_cmd->add_option("--strategy", strategy, "chebyshev | uniform | explicit-list");
  complex_cmd->add_option("--nodes", nodes_arg, "comma-separated node list for explicit-list");
  complex_cmd->add_option("--out", out_path, "output prefix (default: counterexample)");

  // count
  auto* count = app.add_subcommand("count", "integrate a system JSON and count component zeros");
  count->add_option("system", system_path, "LinearSystem JSON file")->required();
  count->add_option("--x0", x0_arg, "comma-separated initial state (default: all ones)");
  count->add_option("--component", component, "1-based component to scan");
  count->add_option("--out", out_path, "report JSON path (default: stdout)");
  add_tols(count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto parse_list = [](const std::string& s) {
      std::vector<double> values;
      std::size_t pos = 0;
      while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        values.push_back(parse_double(s.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      return values;
    };

    if (construct->parsed()) {
      const auto nodes = make_nodes(d, parse_strategy(strategy), parse_list(nodes_arg));
      const CounterexampleSpec spec = make_counterexample(nodes, margin);
      print_spec_summary(spec);
      write_spec_and_system(spec, out_path.empty() ? "counterexample" : out_path);
    } else if (demo->parsed()) {
      const auto rows = run_demo(d_max, margin, config);
      emit(out_path, demo_csv(rows));
    } else if (stress->parsed()) {
      const StressReport report = run_stress(trials, n_max, seed_or_env(seed, seed_set), config);
      emit(out_path, stress_json(report));
      if (report.violations > 0) {
        std::cerr << "stress: " << report.violations << " bound violations\n";
        return 1;
      }
    } else if (bound->parsed()) {
      std::cout << format_double(scalar_zero_bound({bn, bC, balpha, bbeta})) << "\n";
    } else if (complex_cmd->parsed()) {
      const auto nodes = make_nodes(d, parse_strategy(strategy), parse_list(nodes_arg));
      const CounterexampleSpec spec = make_counterexample_complex(nodes, epsilon, delta);
      const int zeros = certified_zero_count(spec, -1.0, 1.0);
      print_spec_summary(spec);
      std::cout << "zeros certified on [-1,1]: " << zeros << "\n";
      if (zeros != d) {
        std::cerr << "complex: zero count " << zeros << " != d = " << d << "\n";
        return 1;
      }
      write_spec_and_system(spec, out_path.empty() ? "counterexample" : out_path);
    } else if (count->parsed()) {
      std::ifstream in(system_path);
      if (!in) throw std::invalid_argument("cannot open " + system_path);
      const LinearSystem sys = system_from_json(json::parse(in));
      std::vector<double> x0 =
          x0_arg.empty() ? std::vector<double>(sys.dim, 1.0) : parse_list(x0_arg);
      const DenseSolution sol =
          integrate_linear(sys, x0, sys.domain_lo, sys.domain_hi, config);
      const ZeroCountReport report =
          count_sign_changes(sol, component, sys.domain_lo, sys.domain_hi, 1e-12);
      emit(out_path, report_to_json(report).dump(2) + "\n");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "oscilab/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oscilab {

namespace {

// Dormand-Prince 5(4) tableau (FSAL), error weights b5 - b4, and the
// coefficients of the standard quartic continuous extension.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kE[7] = {71.0 / 57600,  0.0,          -71.0 / 16695, 71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525, -1.0 / 40};
constexpr double kD[7] = {-12715105075.0 / 11282082432.0,
                          0.0,
                          87487479700.0 / 32700410799.0,
                          -10690763975.0 / 1880347072.0,
                          701980252875.0 / 199316789632.0,
                          -1453857185.0 / 822651844.0,
                          69997945.0 / 29380423.0};

constexpr std::size_t kMaxSteps = 10'000'000;

void validate_config(const IntegratorConfig& c) {
  if (!(c.rtol > 0.0) || !(c.atol > 0.0)) {
    throw std::invalid_argument("IntegratorConfig: rtol and atol must be > 0");
  }
  if (!(c.initial_step > 0.0) || !(c.initial_step <= c.max_step)) {
    throw std::invalid_argument("IntegratorConfig: need 0 < initial_step <= max_step");
  }
}

void eval_rhs(const LinearSystem& sys, double t, const std::vector<double>& x,
              std::vector<double>& out) {
  const int n = sys.dim;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += sys.entries[i][j].eval(t) * x[j];
    out[i] = acc;
  }
}

}  // namespace

DenseSolution::DenseSolution(std::vector<Step> steps, double lo, double hi, int dim)
    : steps_(std::move(steps)), lo_(lo), hi_(hi), dim_(dim) {
  if (steps_.empty()) throw std::invalid_argument("DenseSolution: no steps");
}

const DenseSolution::Step& DenseSolution::step_at(double t) const {
  if (!(t >= lo_ && t <= hi_)) {
    throw std::invalid_argument("DenseSolution: t outside domain");
  }
  auto it = std::upper_bound(steps_.begin(), steps_.end(), t,
                             [](double v, const Step& s) { return v < s.t0; });
  if (it != steps_.begin()) --it;
  return *it;
}

double DenseSolution::eval(double t, int component) const {
  if (component < 1 || component > dim_) {
    throw std::invalid_argument("DenseSolution: component out of range");
  }
  const Step& s = step_at(t);
  const double th = (t - s.t0) / s.h;
  const auto& r = s.rcont[component - 1];
  return r[0] + th * (r[1] + (1.0 - th) * (r[2] + th * (r[3] + (1.0 - th) * r[4])));
}

std::vector<double> DenseSolution::eval_all(double t) const {
  std::vector<double> out(dim_);
  for (int c = 1; c <= dim_; ++c) out[c - 1] = eval(t, c);
  return out;
}

DenseSolution integrate_linear(const LinearSystem& system, std::span<const double> x0,
                               double t0, double t1, const IntegratorConfig& config) {
  validate_config(config);
  if (system.dim < 1 || static_cast<int>(x0.size()) != system.dim) {
    throw std::invalid_argument("integrate_linear: x0 size must match system dim");
  }
  if (!(t0 < t1) || t0 < system.domain_lo || t1 > system.domain_hi) {
    throw std::invalid_argument("integrate_linear: interval must lie within the system domain");
  }

  const int n = system.dim;
  std::vector<double> y(x0.begin(), x0.end());
  std::array<std::vector<double>, 7> k;
  for (auto& ki : k) ki.assign(n, 0.0);
  std::vector<double> ytmp(n), ynew(n);

  double t = t0;
  double h = std::min(config.initial_step, t1 - t0);
  eval_rhs(system, t, y, k[0]);

  std::vector<DenseSolution::Step> steps;
  std::size_t attempts = 0;
  bool last = false;
  while (!last) {
    if (++attempts > kMaxSteps) {
      throw std::runtime_error("integrate_linear: step budget exhausted");
    }
    h = std::min(h, config.max_step);
    if (t + 1.01 * h >= t1) {  // stretch at most 1% to land on t1 exactly
      h = t1 - t;
      last = true;
    }
    if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0)) {
      throw std::runtime_error("integrate_linear: step size underflow");
    }

    for (int stage = 1; stage < 7; ++stage) {
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < stage; ++j) acc += kA[stage][j] * k[j][i];
        ytmp[i] = y[i] + h * acc;
      }
      eval_rhs(system, t + kC[stage] * h, ytmp, k[stage]);
    }
    // stage 7 was evaluated at y_new (FSAL): ytmp currently holds y_new
    ynew = ytmp;

    double errsq = 0.0;
    for (int i = 0; i < n; ++i) {
      double esum = 0.0;
      for (int j = 0; j < 7; ++j) esum += kE[j] * k[j][i];
      const double sc = config.atol + config.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double e = h * esum / sc;
      errsq += e * e;
    }
    const double err = std::sqrt(errsq / n);

    if (err <= 1.0) {
      for (double v : ynew) {
        if (!std::isfinite(v)) throw std::runtime_error("integrate_linear: non-finite state");
      }
      DenseSolution::Step step;
      step.t0 = t;
      step.h = h;
      step.rcont.resize(n);
      for (int i = 0; i < n; ++i) {
        const double ydiff = ynew[i] - y[i];
        const double bspl = h * k[0][i] - ydiff;
        double dsum = 0.0;
        for (int j = 0; j < 7; ++j) dsum += kD[j] * k[j][i];
        step.rcont[i] = {y[i], ydiff, bspl, ydiff - h * k[6][i] - bspl, h * dsum};
      }
      steps.push_back(std::move(step));
      t += h;
      y = ynew;
      k[0] = k[6];  // FSAL
    } else {
      last = false;  // rejected closing step: keep going
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2)
                                    : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
  return DenseSolution(std::move(steps), t0, t1, n);
}

DenseSolution integrate_scalar_ode(std::span<const Polynomial> a_coeffs,
                                   std::span<const double> y_init, double t0,
                                   double t1, const IntegratorConfig& config) {
  const int n = static_cast<int>(a_coeffs.size());
  if (n < 1) throw std::invalid_argument("integrate_scalar_ode: order must be >= 1");
  if (static_cast<int>(y_init.size()) != n) {
    throw std::invalid_argument("integrate_scalar_ode: need n initial values (y, y', ...)");
  }

  LinearSystem companion;
  companion.dim = n;
  companion.domain_lo = t0;
  companion.domain_hi = t1;
  companion.entries.assign(n, std::vector<Polynomial>(n));
  for (int i = 0; i + 1 < n; ++i) companion.entries[i][i + 1] = Polynomial::constant(1.0);
  // last row (-a_n, ..., -a_1): y^(n) = -a_1 y^(n-1) - ... - a_n y
  for (int j = 0; j < n; ++j) companion.entries[n - 1][j] = a_coeffs[n - 1 - j] * -1.0;

  return integrate_linear(companion, y_init, t0, t1, config);
}

ZeroCountReport count_sign_changes(const DenseSolution& sol, int component,
                                   double lo, double hi, double zero_tol) {
  const auto [dlo, dhi] = sol.domain();
  if (!(lo < hi) || lo < dlo || hi > dhi) {
    throw std::invalid_argument("count_sign_changes: interval outside solution domain");
  }
  if (zero_tol < 0.0) throw std::invalid_argument("count_sign_changes: zero_tol must be >= 0");

  double max_h = 0.0;
  for (const auto& s : sol.steps()) max_h = std::max(max_h, s.h);
  const double resolution = max_h / 8.0;

  ZeroCountReport report;
  report.component = component;
  report.lo = lo;
  report.hi = hi;

  double prev_t = lo;
  double prev_v = sol.eval(lo, component);
  bool prev_tiny = std::abs(prev_v) <= zero_tol;
  if (prev_tiny) report.suspects.push_back(lo);

  const auto scan_point = [&](double t) {
    const double v = sol.eval(t, component);
    const bool tiny = std::abs(v) <= zero_tol;
    if (prev_v != 0.0 && v != 0.0 && std::signbit(prev_v) != std::signbit(v)) {
      report.locations.push_back(refine_zero(sol, component, prev_t, t));
      report.near_tangency.push_back(prev_tiny || tiny);
    } else if (tiny) {
      report.suspects.push_back(t);
    }
    if (v != 0.0) {
      prev_t = t;
      prev_v = v;
      prev_tiny = tiny;
    }
  };

  // march over accepted steps, >= 8 samples per step within [lo, hi]
  for (const auto& s : sol.steps()) {
    const double a = std::max(lo, s.t0);
    const double b = std::min(hi, s.t0 + s.h);
    if (!(a < b)) continue;
    const int m = std::max(8, static_cast<int>(std::ceil((b - a) / resolution)));
    for (int i = 1; i <= m; ++i) {
      scan_point(a + (b - a) * static_cast<double>(i) / m);
    }
  }

  report.count = static_cast<int>(report.locations.size());
  return report;
}

double refine_zero(const DenseSolution& sol, int component, double l, double r) {
  double fl = sol.eval(l, component);
  double fr = sol.eval(r, component);
  if (fl == 0.0 || fr == 0.0 || std::signbit(fl) == std::signbit(fr)) {
    throw std::invalid_argument("refine_zero: bracket endpoints must have strict opposite signs");
  }
  const auto [dlo, dhi] = sol.domain();
  const double width_target = 1e-12 * (dhi - dlo);
  while (r - l > width_target) {
    const double m = 0.5 * (l + r);
    if (m <= l || m >= r) break;  // double resolution exhausted
    const double fm = sol.eval(m, component);
    if (fm == 0.0) return m;
    if (std::signbit(fm) == std::signbit(fl)) {
      l = m;
      fl = fm;
    } else {
      r = m;
    }
  }
  return 0.5 * (l + r);
}

}  // namespace oscilab

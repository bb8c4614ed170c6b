#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "oscilab/counterexample.hpp"
#include "oscilab/polynomial.hpp"

namespace oscilab {

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  double max_step = 1e-2;
  double initial_step = 1e-3;
};

/// Piecewise interpolant of a numeric trajectory: the accepted steps of the
/// embedded Dormand-Prince 5(4) pair with its standard quartic continuous
/// extension. Steps tile the integration interval without gaps.
class DenseSolution {
public:
  struct Step {
    double t0 = 0.0;
    double h = 0.0;
    // per component: the 5 continuous-extension coefficients
    std::vector<std::array<double, 5>> rcont;
  };

  DenseSolution(std::vector<Step> steps, double lo, double hi, int dim);

  /// Value of a component (1-based: component 1 is x_1) at t in the domain.
  double eval(double t, int component) const;
  std::vector<double> eval_all(double t) const;

  std::pair<double, double> domain() const { return {lo_, hi_}; }
  int dim() const { return dim_; }
  const std::vector<Step>& steps() const { return steps_; }

private:
  std::vector<Step> steps_;
  double lo_, hi_;
  int dim_;
  const Step& step_at(double t) const;
};

/// Zero census of one solution component: strict sign changes, bisection-
/// refined locations, and near-tangency samples (|value| <= zero_tol without
/// a sign change) flagged for review rather than counted.
struct ZeroCountReport {
  int component = 1;  // 1-based
  double lo = 0.0, hi = 0.0;
  int count = 0;
  std::vector<double> locations;       // strictly increasing
  std::vector<bool> near_tangency;     // per location: bracketing sample was tiny
  std::vector<double> suspects;        // tiny samples without a sign change
};

/// Adaptive RK5(4) integration of x' = A(t) x from x0 over [t0, t1], with
/// per-step local error <= atol + rtol * |x|. Throws std::runtime_error on
/// step-size underflow or a non-finite state.
DenseSolution integrate_linear(const LinearSystem& system, std::span<const double> x0,
                               double t0, double t1, const IntegratorConfig& config);

/// Order-n scalar equation y^(n) + a_1 y^(n-1) + ... + a_n y = 0 via the
/// companion system with state (y, y', ..., y^(n-1)); component 1 of the
/// result is y. a_coeffs is (a_1, ..., a_n).
DenseSolution integrate_scalar_ode(std::span<const Polynomial> a_coeffs,
                                   std::span<const double> y_init, double t0,
                                   double t1, const IntegratorConfig& config);

/// Scans the dense output at resolution <= max(step width)/8, brackets each
/// strict sign change, and refines it by bisection to width 1e-12 * (hi - lo).
ZeroCountReport count_sign_changes(const DenseSolution& sol, int component,
                                   double lo, double hi, double zero_tol);

/// Bisection on the interpolant; requires strictly opposite signs at l and r.
double refine_zero(const DenseSolution& sol, int component, double l, double r);

}  // namespace oscilab

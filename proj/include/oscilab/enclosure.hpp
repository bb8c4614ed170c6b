#pragma once

#include <cmath>
#include <span>

#include "oscilab/polynomial.hpp"

namespace oscilab {

/// Rigorous bracket of a supremum: `lower` is attained (or approached) by a
/// witness sample, `upper` is a mathematically guaranteed bound.
///
/// Rounding policy: instead of directed rounding, every floating operation
/// contributing to an upper bound carries a slack of 1e-13 * |result|
/// (three orders above the worst-case IEEE double rounding error), tracked
/// as an explicit error radius. See CertValue.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
};

/// A computed value together with a rigorous bound on its distance from the
/// exact real-arithmetic result. Addition and multiplication propagate the
/// radii and widen them by kSlack * |result| per operation, which dominates
/// the IEEE rounding error of that operation.
struct CertValue {
  double v = 0.0;  // computed value
  double e = 0.0;  // |computed - exact| <= e

  static constexpr double kSlack = 1e-13;

  static CertValue exact(double x) { return {x, 0.0}; }

  CertValue operator+(CertValue o) const {
    const double r = v + o.v;
    return {r, e + o.e + kSlack * std::abs(r)};
  }
  CertValue operator-(CertValue o) const {
    const double r = v - o.v;
    return {r, e + o.e + kSlack * std::abs(r)};
  }
  CertValue operator*(CertValue o) const {
    const double r = v * o.v;
    return {r, std::abs(v) * o.e + std::abs(o.v) * e + e * o.e + kSlack * std::abs(r)};
  }
  CertValue abs() const { return {std::abs(v), e}; }

  double upper() const { return v + e; }             // exact <= upper
  double lower() const { return v - e; }             // exact >= lower
  double abs_upper() const { return std::abs(v) + e; }
  double abs_lower() const { return std::max(0.0, std::abs(v) - e); }
};

/// Horner evaluation of p at t with a certified error radius.
CertValue eval_certified(const Polynomial& p, double t);

/// Enclosure of sup_{t in [lo,hi]} |p(t)| with upper - lower <= tol.
/// Branch-and-bound: each cell is bounded by |p(mid)| plus half-width times
/// a coefficient-magnitude bound on |p'| over the cell; cells are bisected
/// best-first until the gap closes.
/// Throws std::invalid_argument on a degenerate interval or tol <= 0, and
/// std::runtime_error if tol is unattainable at double precision.
Enclosure sup_abs_on_interval(const Polynomial& p, double lo, double hi, double tol);

/// Same machinery for sup_{t} sum_i |p_i(t)|; used for certifying the
/// coefficient norm |a| + |a' + a^2| of the constructed systems.
Enclosure sup_abs_sum_on_interval(std::span<const Polynomial> ps, double lo,
                                  double hi, double tol);

/// Rigorous upper bound sum_k |c_k| r^k for sup of |p(z)| over the complex
/// disk |z| <= radius. Throws std::invalid_argument if radius <= 0.
double sup_abs_on_disk(const Polynomial& p, double radius);

}  // namespace oscilab

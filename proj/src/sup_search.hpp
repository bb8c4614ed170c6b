#pragma once

// Internal best-first branch-and-bound for certified suprema of |f| over an
// interval. A problem supplies a certified evaluation of f >= 0 at a point
// and a rigorous Lipschitz bound for f on a cell; the search maintains
//   lower = best certified attained value,
//   upper = largest cell bound still alive,
// and bisects the worst cell until upper - lower <= tol.

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

#include "oscilab/enclosure.hpp"

namespace oscilab::detail {

struct SupProblem {
  virtual ~SupProblem() = default;
  // Certified value of f(t) (f is the nonnegative objective, e.g. |p(t)|).
  virtual CertValue value(double t) const = 0;
  // Rigorous upper bound for sup over [lo,hi] of |f'| (any Lipschitz constant).
  virtual double lipschitz(double lo, double hi) const = 0;
};

inline Enclosure sup_branch_bound(const SupProblem& f, double lo, double hi,
                                  double tol, std::size_t max_cells = 2'000'000) {
  if (!(lo < hi)) throw std::invalid_argument("sup enclosure: degenerate interval");
  if (!(tol > 0.0)) throw std::invalid_argument("sup enclosure: tol must be > 0");

  struct Cell {
    double lo, hi, upper;
    bool operator<(const Cell& o) const { return upper < o.upper; }
  };

  double lower = 0.0;
  auto sample = [&](double t) -> CertValue {
    CertValue val = f.value(t);
    lower = std::max(lower, val.abs_lower());
    return val;
  };

  auto make_cell = [&](double a, double b) -> Cell {
    const double mid = 0.5 * (a + b);
    const CertValue vm = sample(mid);
    const double half = 0.5 * (b - a);
    const double up = vm.abs_upper() + half * f.lipschitz(a, b) * (1.0 + CertValue::kSlack);
    return {a, b, up};
  };

  sample(lo);
  sample(hi);

  std::priority_queue<Cell> queue;
  queue.push(make_cell(lo, hi));

  std::size_t cells = 1;
  while (true) {
    const Cell top = queue.top();
    if (top.upper <= lower + tol) {
      return {lower, std::max(lower, top.upper)};
    }
    if (++cells > max_cells) {
      throw std::runtime_error(
          "sup enclosure: tolerance unattainable (gap " +
          std::to_string(top.upper - lower) + " after cell budget)");
    }
    queue.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    queue.push(make_cell(top.lo, mid));
    queue.push(make_cell(mid, top.hi));
  }
}

}  // namespace oscilab::detail

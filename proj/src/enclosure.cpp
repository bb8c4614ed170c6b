#include "oscilab/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sup_search.hpp"

namespace oscilab {

CertValue eval_certified(const Polynomial& p, double t) {
  CertValue v = CertValue::exact(0.0);
  const CertValue x = CertValue::exact(t);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    v = v * x + CertValue::exact(c[k]);
  }
  return v;
}

namespace {

// sum_i |p_i(t)| over a fixed interval; Lipschitz bound from the derivative
// coefficient magnitudes evaluated at the cell's largest |t|.
class AbsSumProblem final : public detail::SupProblem {
public:
  explicit AbsSumProblem(std::span<const Polynomial> ps) {
    for (const Polynomial& p : ps) {
      polys_.push_back(p);
      const Polynomial dp = p.derivative();
      std::vector<double> dmag;
      for (double c : dp.coeffs()) dmag.push_back(std::abs(c));
      deriv_mags_.push_back(std::move(dmag));
    }
  }

  CertValue value(double t) const override {
    CertValue sum = CertValue::exact(0.0);
    for (const Polynomial& p : polys_) sum = sum + eval_certified(p, t).abs();
    return sum;
  }

  double lipschitz(double lo, double hi) const override {
    const double r = std::max(std::abs(lo), std::abs(hi));
    CertValue sum = CertValue::exact(0.0);
    for (const auto& mags : deriv_mags_) {
      CertValue v = CertValue::exact(0.0);
      for (std::size_t k = mags.size(); k-- > 0;) {
        v = v * CertValue::exact(r) + CertValue::exact(mags[k]);
      }
      sum = sum + v;
    }
    return sum.upper();
  }

private:
  std::vector<Polynomial> polys_;
  std::vector<std::vector<double>> deriv_mags_;
};

}  // namespace

Enclosure sup_abs_on_interval(const Polynomial& p, double lo, double hi, double tol) {
  if (p.is_zero()) {
    if (!(lo < hi)) throw std::invalid_argument("sup_abs_on_interval: degenerate interval");
    if (!(tol > 0.0)) throw std::invalid_argument("sup_abs_on_interval: tol must be > 0");
    return {0.0, 0.0};
  }
  const Polynomial ps[] = {p};
  return sup_abs_sum_on_interval(ps, lo, hi, tol);
}

Enclosure sup_abs_sum_on_interval(std::span<const Polynomial> ps, double lo,
                                  double hi, double tol) {
  if (ps.empty()) throw std::invalid_argument("sup_abs_sum_on_interval: empty list");
  AbsSumProblem problem(ps);
  return detail::sup_branch_bound(problem, lo, hi, tol);
}

double sup_abs_on_disk(const Polynomial& p, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("sup_abs_on_disk: radius must be > 0");
  CertValue sum = CertValue::exact(0.0);
  CertValue rk = CertValue::exact(1.0);
  for (double c : p.coeffs()) {
    sum = sum + CertValue::exact(std::abs(c)) * rk;
    rk = rk * CertValue::exact(radius);
  }
  return sum.upper();
}

}  // namespace oscilab

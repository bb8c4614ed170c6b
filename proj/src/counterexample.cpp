#include "oscilab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oscilab/sturm.hpp"
#include "sup_search.hpp"

namespace oscilab {

namespace {

constexpr double kMinNodeSeparation = 1e-9;

// Past this degree the dense double-coefficient expansion of prod(t - t_i)
// no longer carries all d real roots (adjacent roots near +-1 merge under
// coefficient rounding), so the dense Sturm cross-check is skipped.
constexpr int kDenseFaithfulDegree = 25;

std::vector<double> validated_nodes(std::span<const double> nodes) {
  if (nodes.empty()) throw std::invalid_argument("nodes: at least one node required (d >= 1)");
  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  for (double t : sorted) {
    if (!std::isfinite(t) || t < -1.0 || t > 1.0) {
      throw std::invalid_argument("nodes: must be finite and lie in [-1,1]");
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] < kMinNodeSeparation) {
      throw std::invalid_argument("nodes: pairwise separation must be >= 1e-9");
    }
  }
  return sorted;
}

// Product-form evaluation of a = lambda * prod(t - t_i) and its derivatives,
// with certified error radii. Stable at any degree: products of exact
// factors carry only relative rounding error, no cancellation.
class Factored {
public:
  Factored(double lambda, std::span<const double> nodes)
      : lambda_(lambda), nodes_(nodes.begin(), nodes.end()) {}

  CertValue a(double t) const {
    CertValue v = CertValue::exact(lambda_);
    for (double n : nodes_) v = v * factor(t, n);
    return v;
  }

  // a'(t) = lambda * sum_j prod_{i != j} (t - t_i), via prefix/suffix products
  CertValue a_deriv(double t) const {
    const std::size_t d = nodes_.size();
    std::vector<CertValue> pre(d + 1), suf(d + 1);
    pre[0] = CertValue::exact(1.0);
    suf[d] = CertValue::exact(1.0);
    for (std::size_t i = 0; i < d; ++i) pre[i + 1] = pre[i] * factor(t, nodes_[i]);
    for (std::size_t i = d; i-- > 0;) suf[i] = factor(t, nodes_[i]) * suf[i + 1];
    CertValue sum = CertValue::exact(0.0);
    for (std::size_t j = 0; j < d; ++j) sum = sum + pre[j] * suf[j + 1];
    return CertValue::exact(lambda_) * sum;
  }

  // Rigorous uppers for sup |a|, sup |a'|, sup |a''| over [lo, hi], from the
  // per-factor interval magnitudes M_i = max |t - t_i|.
  struct CellBounds {
    double b0, b1, b2;
  };
  CellBounds cell_bounds(double lo, double hi) const {
    const std::size_t d = nodes_.size();
    std::vector<CertValue> m(d), pre(d + 1), suf(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
      const double mi = std::max(std::abs(lo - nodes_[i]), std::abs(hi - nodes_[i]));
      m[i] = {mi, CertValue::kSlack * mi};
    }
    pre[0] = CertValue::exact(1.0);
    suf[d] = CertValue::exact(1.0);
    for (std::size_t i = 0; i < d; ++i) pre[i + 1] = pre[i] * m[i];
    for (std::size_t i = d; i-- > 0;) suf[i] = m[i] * suf[i + 1];

    const CertValue lam = CertValue::exact(std::abs(lambda_));
    const CertValue b0 = lam * pre[d];

    CertValue s1 = CertValue::exact(0.0);
    for (std::size_t j = 0; j < d; ++j) s1 = s1 + pre[j] * suf[j + 1];
    const CertValue b1 = lam * s1;

    CertValue s2 = CertValue::exact(0.0);
    for (std::size_t j = 0; j < d; ++j) {
      CertValue mid = CertValue::exact(1.0);
      for (std::size_t k = j + 1; k < d; ++k) {
        // mid = prod of m[j+1 .. k-1]
        if (k > j + 1) mid = mid * m[k - 1];
        s2 = s2 + pre[j] * mid * suf[k + 1];
      }
    }
    const CertValue b2 = lam * (CertValue::exact(2.0) * s2);
    return {b0.upper(), b1.upper(), b2.upper()};
  }

  std::size_t degree() const { return nodes_.size(); }

private:
  static CertValue factor(double t, double node) {
    const double f = t - node;
    return {f, CertValue::kSlack * std::abs(f)};
  }

  double lambda_;
  std::vector<double> nodes_;
};

// |a(t)| + |a'(t) + a(t)^2|, Lipschitz bound b1 + b2 + 2*b0*b1
class FactoredNormProblem final : public detail::SupProblem {
public:
  FactoredNormProblem(double lambda, std::span<const double> nodes)
      : f_(lambda, nodes) {}

  CertValue value(double t) const override {
    const CertValue a = f_.a(t);
    const CertValue b = f_.a_deriv(t) + a * a;
    return a.abs() + b.abs();
  }

  double lipschitz(double lo, double hi) const override {
    const auto [b0, b1, b2] = f_.cell_bounds(lo, hi);
    const CertValue l = CertValue::exact(b1) +
                        (CertValue::exact(b2) +
                         CertValue::exact(2.0) * CertValue::exact(b0) * CertValue::exact(b1));
    return l.upper();
  }

private:
  Factored f_;
};

// |a| alone (order 0) or |a'| (order 1)
class FactoredAbsProblem final : public detail::SupProblem {
public:
  FactoredAbsProblem(double lambda, std::span<const double> nodes, int order)
      : f_(lambda, nodes), order_(order) {}

  CertValue value(double t) const override {
    return order_ == 0 ? f_.a(t).abs() : f_.a_deriv(t).abs();
  }

  double lipschitz(double lo, double hi) const override {
    const auto b = f_.cell_bounds(lo, hi);
    return order_ == 0 ? b.b1 : b.b2;
  }

private:
  Factored f_;
  int order_;
};

// coarse positive estimate of sup of a problem's value, to set relative tols
double grid_estimate(const detail::SupProblem& prob, double lo, double hi) {
  double best = 0.0;
  const int n = 1024;
  for (int i = 0; i <= n; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / n;
    best = std::max(best, std::abs(prob.value(t).v));
  }
  return best;
}

double sup_upper(const detail::SupProblem& prob, double lo, double hi) {
  const double est = grid_estimate(prob, lo, hi);
  const double tol = std::max(est * 1e-9, 1e-300);
  return detail::sup_branch_bound(prob, lo, hi, tol).upper;
}

// positive root of q*x^2 + b*x = target, written without cancellation
double quadratic_positive_root(double q, double b, double target) {
  return 2.0 * target / (b + std::sqrt(b * b + 4.0 * q * target));
}

// Dense expansion of prod(t - t_i) with per-coefficient error radii, so the
// disk bounds below hold for the exact product, not just its rounding.
std::vector<CertValue> expand_certified(std::span<const double> nodes) {
  std::vector<CertValue> c{CertValue::exact(1.0)};
  for (double r : nodes) {
    std::vector<CertValue> next(c.size() + 1, CertValue::exact(0.0));
    const CertValue root = CertValue::exact(r);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] = next[k + 1] + c[k];
      next[k] = next[k] - root * c[k];
    }
    c = std::move(next);
  }
  return c;
}

// sum_k (|c_k| + e_k) r^k
double disk_sum(std::span<const CertValue> coeffs, double radius) {
  CertValue sum = CertValue::exact(0.0);
  CertValue rk = CertValue::exact(1.0);
  for (const CertValue& c : coeffs) {
    sum = sum + CertValue{std::abs(c.v) + c.e, 0.0} * rk;
    rk = rk * CertValue::exact(radius);
  }
  return sum.upper();
}

}  // namespace

std::vector<double> chebyshev_nodes(int d) {
  if (d < 1) throw std::invalid_argument("chebyshev_nodes: d must be >= 1");
  std::vector<double> nodes(d);
  for (int k = 1; k <= d; ++k) {
    nodes[d - k] = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * d));
  }
  return nodes;
}

Enclosure certify_norm(double lambda, std::span<const double> nodes, double lo,
                       double hi, double tol) {
  const std::vector<double> sorted = validated_nodes(nodes);
  FactoredNormProblem prob(lambda, sorted);
  return detail::sup_branch_bound(prob, lo, hi, tol);
}

std::pair<double, Enclosure> choose_lambda(std::span<const double> nodes, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) {
    throw std::invalid_argument("choose_lambda: margin must be in (0,1)");
  }
  const std::vector<double> sorted = validated_nodes(nodes);

  const double s0 = sup_upper(FactoredAbsProblem(1.0, sorted, 0), -1.0, 1.0);
  const double s1 = sup_upper(FactoredAbsProblem(1.0, sorted, 1), -1.0, 1.0);
  const double lambda = quadratic_positive_root(s0 * s0, s0 + s1, 1.0 - margin);

  // Direct verification: the separable bound guarantees the true sup is
  // <= 1 - margin, so the enclosure upper must come in under 1 - margin/2.
  FactoredNormProblem norm(lambda, sorted);
  Enclosure cert = detail::sup_branch_bound(norm, -1.0, 1.0, margin / 4.0);
  if (cert.upper > 1.0 - margin / 2.0) {
    cert = detail::sup_branch_bound(norm, -1.0, 1.0, margin / 64.0);
  }
  if (cert.upper >= 1.0) {
    throw std::runtime_error("choose_lambda: certificate upper >= 1 (internal inconsistency)");
  }
  if (cert.upper > 1.0 - margin / 2.0) {
    throw std::runtime_error("choose_lambda: certificate missed the 1 - margin/2 target");
  }
  return {lambda, cert};
}

double choose_lambda_complex(std::span<const double> nodes, double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("choose_lambda_complex: epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("choose_lambda_complex: delta must be in (0,1)");
  }
  const std::vector<double> sorted = validated_nodes(nodes);
  const double r = std::hypot(1.0 + epsilon, epsilon);

  const std::vector<CertValue> p = expand_certified(sorted);
  std::vector<CertValue> dp;
  for (std::size_t k = 1; k < p.size(); ++k) {
    dp.push_back(p[k] * CertValue::exact(static_cast<double>(k)));
  }
  const double d0 = disk_sum(p, r);
  const double d1 = disk_sum(dp, r);

  // Solve against a hair less than delta so the recomputed certificate lands
  // strictly below delta despite conservative rounding.
  const double target = delta * (1.0 - 1e-9);
  return quadratic_positive_root(d0 * d0, d0 + d1, target);
}

CounterexampleSpec make_counterexample(std::vector<double> nodes, double margin) {
  CounterexampleSpec spec;
  spec.nodes = validated_nodes(nodes);
  spec.margin = margin;
  auto [lambda, cert] = choose_lambda(spec.nodes, margin);
  spec.lambda = lambda;
  spec.p = Polynomial::from_roots(spec.nodes, 1.0);
  spec.a = spec.p * lambda;
  spec.norm_certificate = cert;
  return spec;
}

CounterexampleSpec make_counterexample_complex(std::vector<double> nodes,
                                               double epsilon, double delta) {
  CounterexampleSpec spec;
  spec.nodes = validated_nodes(nodes);
  spec.margin = delta;
  spec.lambda = choose_lambda_complex(spec.nodes, epsilon, delta);
  spec.p = Polynomial::from_roots(spec.nodes, 1.0);
  spec.a = spec.p * spec.lambda;

  const double r = std::hypot(1.0 + epsilon, epsilon);
  DiskCertificate disk{r, disk_norm_bound(spec.a, r)};
  if (disk.bound > delta) {
    throw std::runtime_error("make_counterexample_complex: disk certificate exceeds delta");
  }
  spec.disk = disk;

  // The real-interval certificate is implied (the disk covers [-1,1]) but is
  // recomputed so the invariant norm_certificate.upper < 1 carries its own
  // evidence.
  spec.norm_certificate =
      certify_norm(spec.lambda, spec.nodes, -1.0, 1.0, delta / 4.0);
  if (spec.norm_certificate.upper >= 1.0) {
    throw std::runtime_error("make_counterexample_complex: interval certificate >= 1");
  }
  return spec;
}

LinearSystem build_system(const CounterexampleSpec& spec) {
  if (spec.nodes.empty() || !(spec.lambda > 0.0)) {
    throw std::invalid_argument("build_system: invalid spec");
  }
  LinearSystem sys;
  sys.dim = 2;
  sys.domain_lo = -1.0;
  sys.domain_hi = 1.0;
  const Polynomial zero;
  sys.entries = {{spec.a, zero},
                 {spec.a.derivative() + spec.a * spec.a, zero}};
  return sys;
}

ClosedFormState closed_form(const CounterexampleSpec& spec, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("closed_form: non-finite t");
  const Polynomial P = spec.a.antiderivative();
  ClosedFormState s;
  s.t = t;
  s.phi1 = std::exp(P.eval(t));
  s.phi2 = spec.a.eval(t) * s.phi1;
  return s;
}

int certified_zero_count(const CounterexampleSpec& spec, double lo, double hi) {
  if (!(lo < hi) || lo < -1.0 || hi > 1.0) {
    throw std::invalid_argument("certified_zero_count: interval must be within [-1,1]");
  }
  int node_count = 0;
  for (double t : spec.nodes) {
    if (t > lo && t <= hi) ++node_count;
  }
  if (spec.a.degree() <= kDenseFaithfulDegree) {
    const int sturm = sturm_count(spec.a, lo, hi);
    if (sturm != node_count) {
      throw std::runtime_error(
          "certified_zero_count: dense Sturm count " + std::to_string(sturm) +
          " disagrees with the node count " + std::to_string(node_count));
    }
  }
  return node_count;
}

double disk_norm_bound(const Polynomial& a, double radius) {
  const Polynomial b = a.derivative() + a * a;
  CertValue sum = CertValue::exact(sup_abs_on_disk(a, radius)) +
                  CertValue::exact(sup_abs_on_disk(b, radius));
  return sum.upper();
}

}  // namespace oscilab

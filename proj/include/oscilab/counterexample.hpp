#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oscilab/enclosure.hpp"
#include "oscilab/polynomial.hpp"

namespace oscilab {

/// Certified smallness of the coefficients over a complex disk |z| <= radius.
struct DiskCertificate {
  double radius = 0.0;
  double bound = 0.0;  // rigorous upper for sup_disk |a| + sup_disk |a' + a^2|
};

/// A constructed 2x2 system with prescribed zero count: a(t) = lambda * p(t),
/// p monic with the given nodes as simple roots, lambda small enough that
/// sup_{[-1,1]} (|a| + |a' + a^2|) stays below 1 with quantified slack.
struct CounterexampleSpec {
  std::vector<double> nodes;   // ascending, pairwise distinct, in [-1,1]
  double margin = 0.0;         // requested slack (the delta target for disk builds)
  double lambda = 0.0;
  Polynomial p;                // monic prod (t - nodes[i])
  Polynomial a;                // lambda * p
  Enclosure norm_certificate;  // sup_{[-1,1]} (|a| + |a' + a^2|)
  std::optional<DiskCertificate> disk;  // present for complex-neighborhood builds
};

/// Square matrix of polynomial entries in t; x' = A(t) x on [lo, hi].
struct LinearSystem {
  int dim = 0;
  std::vector<std::vector<Polynomial>> entries;  // row-major, dim x dim
  double domain_lo = -1.0;
  double domain_hi = 1.0;
};

/// The closed-form trajectory at a point: phi1 = exp(P(t)) with P' = a and
/// P(0) = 0 (so phi1(0) = 1), phi2 = a(t) * phi1.
struct ClosedFormState {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double t = 0.0;
};

/// cos((2k-1)pi/(2d)), k = 1..d, sorted ascending.
std::vector<double> chebyshev_nodes(int d);

/// Largest lambda satisfying the separable bound
///   lambda*S0 + lambda*S1 + lambda^2*S0^2 <= 1 - margin,
/// where S0, S1 are rigorous uppers for sup|p|, sup|p'| on [-1,1], followed
/// by direct verification that the certified sup of |a| + |a' + a^2| stays
/// <= 1 - margin/2. Returns lambda and the verified enclosure.
/// Nodes must be pairwise separated by >= 1e-9 and lie in [-1,1];
/// margin must be in (0,1).
std::pair<double, Enclosure> choose_lambda(std::span<const double> nodes, double margin);

/// Lambda making the coefficients uniformly small (sum of disk bounds <= delta)
/// on the disk |z| <= r, r = hypot(1 + epsilon, epsilon), which covers the
/// epsilon-rectangle around [-1,1]. Solves the same quadratic against the
/// disk coefficient bounds D0, D1 of p, p'.
double choose_lambda_complex(std::span<const double> nodes, double epsilon, double delta);

CounterexampleSpec make_counterexample(std::vector<double> nodes, double margin);
CounterexampleSpec make_counterexample_complex(std::vector<double> nodes,
                                               double epsilon, double delta);

/// dim-2 system [[a, 0], [a' + a^2, 0]] on [-1,1]. Its column-sum operator
/// norm at each t equals |a(t)| + |a'(t) + a(t)^2|, so the spec's
/// norm_certificate bounds sup_t ||A(t)||_1.
LinearSystem build_system(const CounterexampleSpec& spec);

ClosedFormState closed_form(const CounterexampleSpec& spec, double t);

/// Number of zeros of phi2 in (lo, hi], for [lo, hi] within [-1,1].
/// phi1 > 0 everywhere, so these are exactly the zeros of a; the count is
/// the number of nodes in (lo, hi], cross-checked against sturm_count on the
/// dense coefficients wherever that representation is faithful (degree <= 25;
/// beyond that the dense double expansion provably loses roots).
int certified_zero_count(const CounterexampleSpec& spec, double lo, double hi);

/// Enclosure of sup_{[lo,hi]} (|a| + |a' + a^2|) for a = lambda * prod(t - nodes[i]),
/// evaluated in product form (stable for any degree, unlike the dense
/// coefficient path). Exposed for cross-checking against the dense enclosure.
Enclosure certify_norm(double lambda, std::span<const double> nodes, double lo,
                       double hi, double tol);

/// Rigorous upper for sup_disk |a| + sup_disk |a' + a^2| over |z| <= radius,
/// from the dense coefficient sums.
double disk_norm_bound(const Polynomial& a, double radius);

}  // namespace oscilab

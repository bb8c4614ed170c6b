#pragma once

#include <span>
#include <vector>

#include "oscilab/enclosure.hpp"
#include "oscilab/polynomial.hpp"

namespace oscilab {

/// Parameters of the scalar zero-count bound: an order-n linear ODE
/// y^(n) + a_1 y^(n-1) + ... + a_n y = 0 with |a_i| <= C on [alpha, beta].
struct BoundQuery {
  int n = 1;
  double C = 1.0;
  double alpha = -1.0;
  double beta = 1.0;
};

/// n - 1 + (n / ln 2) * C * (beta - alpha): an upper bound for the number of
/// isolated zeros of any solution on [alpha, beta].
/// Requires n >= 1 and C >= 1 (the bound's stated hypothesis); callers with a
/// smaller empirical sup must pass max(sup, 1).
double scalar_zero_bound(const BoundQuery& q);

enum class Verdict { certified, refuted, inconclusive };

/// Per-coefficient sup-norm enclosures compared against a claimed bound C.
/// certified: every enclosure.upper <= C; refuted: some enclosure.lower > C;
/// inconclusive: an enclosure straddles C at this tolerance (retry smaller tol).
/// Comparisons allow 1e-12 * max(1, C) of slack so a sup attained exactly at
/// C still certifies despite the conservative rounding of the upper bound.
struct BoundCertificate {
  std::vector<Enclosure> sups;
  double claimed_C = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

BoundCertificate certify_coefficient_bound(std::span<const Polynomial> coeffs,
                                           double C, double lo, double hi,
                                           double tol);

const char* to_string(Verdict v);

}  // namespace oscilab

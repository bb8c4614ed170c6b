#include "oscilab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscilab {

double scalar_zero_bound(const BoundQuery& q) {
  if (q.n < 1) throw std::invalid_argument("scalar_zero_bound: order n must be >= 1");
  if (!(q.C >= 1.0)) throw std::invalid_argument("scalar_zero_bound: C >= 1 required");
  if (!(q.alpha < q.beta)) throw std::invalid_argument("scalar_zero_bound: alpha < beta required");
  const double n = static_cast<double>(q.n);
  return n - 1.0 + n / std::numbers::ln2 * q.C * (q.beta - q.alpha);
}

BoundCertificate certify_coefficient_bound(std::span<const Polynomial> coeffs,
                                           double C, double lo, double hi,
                                           double tol) {
  if (coeffs.empty()) {
    throw std::invalid_argument("certify_coefficient_bound: empty coefficient list");
  }
  if (!(C > 0.0)) throw std::invalid_argument("certify_coefficient_bound: C must be > 0");

  BoundCertificate cert;
  cert.claimed_C = C;
  // Comparisons carry the same 1e-12 tolerance used for zero-count-vs-bound
  // checks; without it a sup attained exactly at C could never certify, since
  // rigorous uppers sit a rounding slack above the true value.
  const double cmp = C + 1e-12 * std::max(1.0, C);
  bool all_below = true, any_above = false;
  for (const Polynomial& p : coeffs) {
    Enclosure enc = sup_abs_on_interval(p, lo, hi, tol);
    if (enc.upper > cmp) all_below = false;
    if (enc.lower > cmp) any_above = true;
    cert.sups.push_back(enc);
  }
  cert.verdict = all_below  ? Verdict::certified
                 : any_above ? Verdict::refuted
                             : Verdict::inconclusive;
  return cert;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace oscilab

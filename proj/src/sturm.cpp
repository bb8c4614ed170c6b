#include "oscilab/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace oscilab {

namespace {

using Chain = std::vector<std::vector<long double>>;

// Coefficients below kTrim relative to the largest magnitude of a remainder
// are treated as exact zeros; they are division noise, and keeping them
// produces spurious low-degree chain tails.
constexpr long double kTrim = 1e-15L;

// Sign evaluations treat |value| below kZero times the magnitude majorant
// as unresolvable; the caller then perturbs the endpoint.
constexpr long double kZero = 1e-12L;

std::vector<long double> normalized(std::vector<long double> c) {
  long double m = 0.0L;
  for (long double x : c) m = std::max(m, std::abs(x));
  if (m > 0.0L) {
    for (long double& x : c) x /= m;
  }
  return c;
}

std::vector<long double> trimmed(std::vector<long double> c) {
  long double m = 0.0L;
  for (long double x : c) m = std::max(m, std::abs(x));
  std::size_t n = c.size();
  while (n > 0 && std::abs(c[n - 1]) <= kTrim * m) --n;
  c.resize(n);
  return c;
}

// remainder of u / v in place; v has nonzero leading coefficient.
// majorant tracks the largest magnitude seen during the division, the scale
// against which a pure round-off remainder is recognized.
struct Remainder {
  std::vector<long double> coeffs;
  long double majorant;
};

Remainder remainder(std::vector<long double> u, const std::vector<long double>& v) {
  long double majorant = 0.0L;
  for (long double x : u) majorant = std::max(majorant, std::abs(x));
  const std::size_t dv = v.size() - 1;
  while (u.size() > dv) {
    const long double q = u.back() / v.back();
    majorant = std::max(majorant, std::abs(q));
    const std::size_t shift = u.size() - v.size();
    for (std::size_t k = 0; k < dv; ++k) {
      u[shift + k] -= q * v[k];
      majorant = std::max(majorant, std::abs(u[shift + k]));
    }
    u.pop_back();
  }
  return {std::move(u), majorant};
}

Chain build_chain(const Polynomial& p) {
  Chain chain;
  std::vector<long double> s0(p.coeffs().begin(), p.coeffs().end());
  chain.push_back(normalized(std::move(s0)));

  std::vector<long double> s1;
  for (std::size_t k = 1; k < chain[0].size(); ++k) {
    s1.push_back(chain[0][k] * static_cast<long double>(k));
  }
  if (s1.empty()) return chain;  // constant polynomial
  chain.push_back(normalized(std::move(s1)));

  while (chain.back().size() > 1) {
    Remainder rem = remainder(chain[chain.size() - 2], chain.back());
    long double rmax = 0.0L;
    for (long double x : rem.coeffs) rmax = std::max(rmax, std::abs(x));
    // a remainder at the round-off floor of the division is an exact zero:
    // the chain has reached gcd(p, p') (repeated roots)
    if (rmax <= 1e-14L * rem.majorant) break;
    std::vector<long double> r = trimmed(std::move(rem.coeffs));
    if (r.empty()) break;
    for (long double& x : r) x = -x;
    chain.push_back(normalized(std::move(r)));
  }
  return chain;
}

// sign at t, or 0 when the value is below the round-off majorant
int chain_sign(const std::vector<long double>& c, long double t) {
  long double v = 0.0L, mag = 0.0L;
  const long double at = std::abs(t);
  for (std::size_t k = c.size(); k-- > 0;) {
    v = v * t + c[k];
    mag = mag * at + std::abs(c[k]);
  }
  if (std::abs(v) <= kZero * mag) return 0;
  return v > 0.0L ? 1 : -1;
}

int variations(const Chain& chain, long double t) {
  int count = 0, last = 0;
  for (const auto& c : chain) {
    const int s = chain_sign(c, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Resolves the sign of the first chain member at t, nudging t inward
// (toward `inward`) while the value is ambiguous or exactly zero.
long double resolve_endpoint(const Chain& chain, long double t, long double inward,
                             long double width) {
  long double shift = 1e-12L * width;
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (chain_sign(chain[0], t) != 0) return t;
    t += inward * shift;
    shift *= 2.0L;
  }
  throw std::runtime_error("sturm_count: endpoint sign unresolved within perturbation budget");
}

}  // namespace

int sturm_count(const Polynomial& p, double lo, double hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: degenerate interval");
  if (p.degree() == 0) return 0;

  const Chain chain = build_chain(p);
  const long double width = static_cast<long double>(hi) - static_cast<long double>(lo);
  const long double a = resolve_endpoint(chain, lo, +1.0L, width);
  const long double b = resolve_endpoint(chain, hi, -1.0L, width);
  if (!(a < b)) throw std::runtime_error("sturm_count: interval collapsed by perturbation");
  return variations(chain, a) - variations(chain, b);
}

}  // namespace oscilab

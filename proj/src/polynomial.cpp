#include "oscilab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscilab {

namespace {

void check_finite(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite value");
    }
  }
}

}  // namespace

Polynomial::Polynomial() : coeffs_{0.0} {}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  check_finite(coeffs_, "Polynomial");
  canonicalize();
}

void Polynomial::canonicalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::from_roots(std::span<const double> roots, double scale) {
  check_finite(roots, "from_roots");
  if (!std::isfinite(scale)) throw std::invalid_argument("from_roots: non-finite scale");
  std::vector<double> c{scale};
  for (double r : roots) {
    // multiply by (t - r)
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

double Polynomial::eval(double t) const {
  double v = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * t + coeffs_[k];
  return v;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return Polynomial();
  std::vector<double> a(coeffs_.size() + 1, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  }
  return Polynomial(std::move(a));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<double> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<double> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<double> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(double s) const {
  if (!std::isfinite(s)) throw std::invalid_argument("Polynomial: non-finite scale");
  std::vector<double> c(coeffs_);
  for (double& x : c) x *= s;
  return Polynomial(std::move(c));
}

bool approx_equal(const Polynomial& p, const Polynomial& q, double tol) {
  double scale = 0.0;
  for (double c : p.coeffs()) scale = std::max(scale, std::abs(c));
  for (double c : q.coeffs()) scale = std::max(scale, std::abs(c));
  const double bound = tol * scale;
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const double ca = k < a.size() ? a[k] : 0.0;
    const double cb = k < b.size() ? b[k] : 0.0;
    if (std::abs(ca - cb) > bound) return false;
  }
  return true;
}

}  // namespace oscilab

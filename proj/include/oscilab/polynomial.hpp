#pragma once

#include <span>
#include <vector>

namespace oscilab {

/// Real univariate polynomial, dense ascending coefficients (coeffs[k]
/// multiplies t^k). Canonical form: the trailing coefficient is nonzero
/// unless the polynomial is identically zero, in which case coeffs == {0}.
/// Immutable after construction; all operations return new values.
class Polynomial {
public:
  Polynomial();                                  // zero polynomial
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c);
  /// scale * prod_i (t - roots[i]), expanded to dense form.
  /// Empty roots with scale s gives the constant polynomial s.
  static Polynomial from_roots(std::span<const double> roots, double scale);

  double eval(double t) const;                   // Horner
  Polynomial derivative() const;
  Polynomial antiderivative() const;             // P with P' = *this, P(0) = 0

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.back(); }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(double s) const;

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

private:
  std::vector<double> coeffs_;
  void canonicalize();
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

/// Coefficient-wise comparison with absolute tolerance scaled by the
/// largest coefficient magnitude of either operand.
bool approx_equal(const Polynomial& p, const Polynomial& q, double tol = 1e-12);

}  // namespace oscilab

#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace parafam {

/// Integer polynomial in q, coefficients stored lowest degree first with no
/// trailing zeros.
class OrderPolynomial {
 public:
  OrderPolynomial() = default;  // the zero polynomial
  explicit OrderPolynomial(std::vector<mpz_class> coefficients);

  static OrderPolynomial constant(long c);
  static OrderPolynomial monomial(int degree);
  /// q^degree - sign
  static OrderPolynomial binomial(int degree, int sign = 1);

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class operator()(const mpz_class& q) const;

  OrderPolynomial& operator*=(const OrderPolynomial& other);
  friend OrderPolynomial operator*(OrderPolynomial a, const OrderPolynomial& b) { return a *= b; }
  OrderPolynomial pow(int exponent) const;

  std::string to_string() const;

  friend bool operator==(const OrderPolynomial&, const OrderPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace parafam

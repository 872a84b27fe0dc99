#include "parafam/order_polynomial.hpp"

#include <sstream>

namespace parafam {

OrderPolynomial::OrderPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void OrderPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

OrderPolynomial OrderPolynomial::constant(long c) { return OrderPolynomial({mpz_class(c)}); }

OrderPolynomial OrderPolynomial::monomial(int degree) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = 1;
  return OrderPolynomial(std::move(c));
}

OrderPolynomial OrderPolynomial::binomial(int degree, int sign) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] += 1;
  c[0] -= sign;
  return OrderPolynomial(std::move(c));
}

mpz_class OrderPolynomial::operator()(const mpz_class& q) const {
  mpz_class value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * q + *it;
  return value;
}

OrderPolynomial& OrderPolynomial::operator*=(const OrderPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> product(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      product[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(product);
  trim();
  return *this;
}

OrderPolynomial OrderPolynomial::pow(int exponent) const {
  OrderPolynomial result = constant(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string OrderPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[d];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || d == 0) out << mag.get_str();
    if (d > 0) out << "q" << (d > 1 ? "^" + std::to_string(d) : "");
    first = false;
  }
  return out.str();
}

}  // namespace parafam

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace parafam {

/// An exact number of the form r * prod_v q_v^(e_v / 2), where v runs over
/// places and q_v is the residue size at v.
///
/// Stored exponents are reduced to 1 (odd) or dropped (even), with the even
/// part folded into r. Two values compare equal when they are equal as real
/// numbers; that is decided exactly from the prime factorization of the q_v.
class HalfPowerRational {
 public:
  HalfPowerRational() = default;  // 1
  explicit HalfPowerRational(mpq_class rational) : rational_(std::move(rational)) {}

  /// q^(exponent / 2) attached to `place`.
  static HalfPowerRational half_power(const std::string& place, std::uint64_t q, int exponent);

  const mpq_class& rational() const { return rational_; }

  struct Root {
    std::uint64_t q;
    int exponent;  // always 1 after normalization
  };
  const std::map<std::string, Root>& half_exponents() const { return roots_; }

  /// True when no half powers remain.
  bool is_rational() const { return roots_.empty(); }
  bool is_one() const;

  /// Canonical value as c * sqrt(radicand) with radicand squarefree.
  std::pair<mpq_class, mpz_class> canonical() const;

  HalfPowerRational& operator*=(const HalfPowerRational& other);
  friend HalfPowerRational operator*(HalfPowerRational a, const HalfPowerRational& b) {
    return a *= b;
  }
  HalfPowerRational inverse() const;

  std::string to_string() const;

  friend bool operator==(const HalfPowerRational& a, const HalfPowerRational& b) {
    return a.canonical() == b.canonical();
  }

 private:
  void normalize();
  mpq_class rational_ = 1;
  std::map<std::string, Root> roots_;
};

}  // namespace parafam

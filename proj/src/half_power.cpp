#include "parafam/half_power.hpp"

#include <sstream>

#include "parafam/error.hpp"
#include "parafam/reductive.hpp"

namespace parafam {
namespace {

mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

mpq_class int_power(std::uint64_t q, int exponent) {
  mpz_class base;
  mpz_pow_ui(base.get_mpz_t(), to_mpz(q).get_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? mpq_class(base) : mpq_class(1) / mpq_class(base);
}

}  // namespace

HalfPowerRational HalfPowerRational::half_power(const std::string& place, std::uint64_t q,
                                                int exponent) {
  if (!prime_power_base(q))
    throw DomainError("invalid residue size " + std::to_string(q) + " at place " + place);
  HalfPowerRational h;
  if (exponent != 0) h.roots_[place] = {q, exponent};
  h.normalize();
  return h;
}

void HalfPowerRational::normalize() {
  for (auto it = roots_.begin(); it != roots_.end();) {
    auto& [q, e] = it->second;
    const int odd = ((e % 2) + 2) % 2;
    rational_ *= int_power(q, (e - odd) / 2);
    if (odd == 0) {
      it = roots_.erase(it);
    } else {
      e = 1;
      ++it;
    }
  }
  rational_.canonicalize();
}

bool HalfPowerRational::is_one() const { return *this == HalfPowerRational(); }

std::pair<mpq_class, mpz_class> HalfPowerRational::canonical() const {
  // Count the total half-exponent of each prime across the places.
  std::map<std::uint64_t, long> prime_exponents;
  for (const auto& [place, root] : roots_) {
    std::uint64_t q = root.q;
    const std::uint64_t p = *prime_power_base(q);
    long k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    prime_exponents[p] += k * root.exponent;
  }
  mpq_class scale = rational_;
  mpz_class radicand = 1;
  for (const auto& [p, e] : prime_exponents) {
    const long odd = ((e % 2) + 2) % 2;
    scale *= int_power(p, static_cast<int>((e - odd) / 2));
    if (odd) radicand *= to_mpz(p);
  }
  scale.canonicalize();
  if (scale == 0) radicand = 1;
  return {scale, radicand};
}

HalfPowerRational& HalfPowerRational::operator*=(const HalfPowerRational& other) {
  rational_ *= other.rational_;
  for (const auto& [place, root] : other.roots_) {
    auto [it, inserted] = roots_.try_emplace(place, root);
    if (!inserted) {
      if (it->second.q != root.q)
        throw DomainError("place " + place + " used with two residue sizes");
      it->second.exponent += root.exponent;
    }
  }
  normalize();
  return *this;
}

HalfPowerRational HalfPowerRational::inverse() const {
  if (rational_ == 0) throw DomainError("division by zero");
  HalfPowerRational inv(1 / rational_);
  for (const auto& [place, root] : roots_) inv.roots_[place] = {root.q, -root.exponent};
  inv.normalize();
  return inv;
}

std::string HalfPowerRational::to_string() const {
  std::ostringstream out;
  out << rational_.get_str();
  for (const auto& [place, root] : roots_) out << " * sqrt(q_" << place << "=" << root.q << ")";
  return out.str();
}

}  // namespace parafam

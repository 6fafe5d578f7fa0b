#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heffter {

/// Exact rational with normalized sign and lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  bool is_integer() const { return den == 1; }
  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool operator==(const Rational&) const = default;

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace heffter

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "klmult/bigint.hpp"

namespace klmult {

// Univariate polynomial in t with arbitrary-precision integer coefficients;
// trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly constant(BigInt c);
  static UniPoly one() { return constant(1); }
  // (1-t)^k
  static UniPoly one_minus_t_pow(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const BigInt& s) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const = default;

  BigInt eval_one() const;

  // Write p = (1-t)^c * q with q(1) != 0; the zero polynomial returns {0, 0}.
  std::pair<int, UniPoly> strip_one_minus_t() const;

  // First `count` coefficients of the power series  *this / (1-t)^m.
  std::vector<BigInt> series_coeffs(int m, int count) const;

  // Coefficients when rewritten in the basis (1-t)^k, index k.
  std::vector<BigInt> one_minus_t_basis() const;

  std::string str() const;                 // "1 - t + 2*t^3"
  std::string str_one_minus_t_basis() const;  // "2*(1-t)^7 - (1-t)^8"

 private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace klmult

#include "klmult/unipoly.hpp"

#include "klmult/errors.hpp"

namespace klmult {

BigInt binomial(long a, long k) {
  if (k < 0 || k > a) return 0;
  if (a < 0) throw input_error("binomial: negative upper index");
  k = std::min(k, a - k);
  BigInt num = 1;
  for (long t = 0; t < k; ++t) {
    num *= (a - t);
    num /= (t + 1);  // exact at every step
  }
  return num;
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(BigInt c) {
  UniPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

UniPoly UniPoly::one_minus_t_pow(int k) {
  std::vector<BigInt> c(k + 1);
  for (int j = 0; j <= k; ++j) c[j] = ((j % 2) ? -1 : 1) * binomial(k, j);
  return UniPoly(std::move(c));
}

BigInt UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<BigInt> c(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<BigInt> c(c_);
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) c[a + b] += c_[a] * o.c_[b];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const BigInt& s) const {
  std::vector<BigInt> c(c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

BigInt UniPoly::eval_one() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

std::pair<int, UniPoly> UniPoly::strip_one_minus_t() const {
  if (is_zero()) return {0, UniPoly()};
  UniPoly q = *this;
  int c = 0;
  while (q.eval_one() == 0) {
    // divide by (1-t): with p = (1-t) q, q_k = p_0 + p_1 + ... + p_k ... or
    // directly q_k = q_{k-1} + ... simplest: synthetic division by (1 - t).
    std::vector<BigInt> d(q.c_.size() - 1);
    BigInt carry = 0;
    for (size_t k = 0; k + 1 < q.c_.size(); ++k) {
      carry = q.c_[k] + carry;
      d[k] = carry;
    }
    q = UniPoly(std::move(d));
    c++;
    if (q.is_zero()) break;
  }
  return {c, q};
}

std::vector<BigInt> UniPoly::series_coeffs(int m, int count) const {
  std::vector<BigInt> out(count, 0);
  for (int k = 0; k < count; ++k) {
    BigInt s = 0;
    for (int j = 0; j <= k && j < static_cast<int>(c_.size()); ++j) {
      if (m == 0) {
        if (j == k) s += c_[j];
      } else {
        s += c_[j] * binomial(m - 1 + k - j, k - j);
      }
    }
    out[k] = s;
  }
  return out;
}

std::vector<BigInt> UniPoly::one_minus_t_basis() const {
  // Substitute t = 1 - s and read off coefficients of s^k.
  std::vector<BigInt> out(c_.size(), 0);
  UniPoly acc = UniPoly::constant(1);  // (1-s)^j expanded in s
  for (size_t j = 0; j < c_.size(); ++j) {
    for (int k = 0; k <= acc.degree(); ++k) out[k] += c_[j] * acc.coeff(k);
    acc = acc * UniPoly({BigInt(1), BigInt(-1)});
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

static void append_term(std::string& s, const BigInt& c, const std::string& var) {
  bool first = s.empty();
  BigInt a = c;
  if (!first) {
    s += (a < 0) ? " - " : " + ";
    if (a < 0) a = -a;
  } else if (a < 0 && !var.empty()) {
    s += "-";
    a = -a;
  }
  if (var.empty()) {
    s += a.str();
  } else {
    if (a != 1) s += a.str() + "*";
    s += var;
  }
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    if (coeff(k) == 0) continue;
    std::string var = (k == 0) ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    append_term(s, coeff(k), var);
  }
  return s;
}

std::string UniPoly::str_one_minus_t_basis() const {
  if (is_zero()) return "0";
  auto basis = one_minus_t_basis();
  std::string s;
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k] == 0) continue;
    std::string var =
        (k == 0) ? "" : (k == 1 ? "(1-t)" : "(1-t)^" + std::to_string(k));
    append_term(s, basis[k], var);
  }
  return s;
}

}  // namespace klmult

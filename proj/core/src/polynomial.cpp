#include "klmult/polynomial.hpp"

#include <algorithm>
#include <map>

#include "klmult/covex.hpp"
#include "klmult/errors.hpp"

namespace klmult {

std::vector<Box> SpecializedMatrix::var_positions() const {
  std::vector<Box> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (at(i, j) == Cell::Var) out.push_back({i, j});
  return out;
}

std::string SpecializedMatrix::str() const {
  std::string s;
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      switch (at(i, j)) {
        case Cell::Zero: s += "    0"; break;
        case Cell::One: s += "    1"; break;
        case Cell::Var: {
          std::string v = "z" + std::to_string(i) + "," + std::to_string(j);
          s += std::string(5 - std::min<size_t>(5, v.size()), ' ') + v;
          break;
        }
      }
    }
    s += '\n';
  }
  return s;
}

SpecializedMatrix build_zv(const Permutation& v) {
  const int n = v.n();
  SpecializedMatrix z;
  z.n = n;
  z.cells.assign(n * n, Cell::Zero);
  Permutation vinv = v.inverse();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Cell c;
      if (i == n - v(j) + 1) c = Cell::One;
      else if (i < n - v(j) + 1 && j < vinv(n + 1 - i)) c = Cell::Var;
      else c = Cell::Zero;
      z.cells[(i - 1) * n + (j - 1)] = c;
    }
  }
  return z;
}

SpecializedMatrix generic_matrix(int n) {
  SpecializedMatrix z;
  z.n = n;
  z.cells.assign(n * n, Cell::Var);
  return z;
}

std::vector<Box> reading_order(const SpecializedMatrix& z, Reading r) {
  std::vector<Box> out;
  if (r == Reading::SwNe) {
    for (int i = 1; i <= z.n; ++i)
      for (int j = 1; j <= z.n; ++j)
        if (z.at(i, j) == Cell::Var) out.push_back({i, j});
  } else {
    for (int j = z.n; j >= 1; --j)
      for (int i = 1; i <= z.n; ++i)
        if (z.at(i, j) == Cell::Var) out.push_back({i, j});
  }
  return out;
}

TermOrder TermOrder::composite(const Permutation& v, std::vector<Box> priority) {
  TermOrder ord;
  ord.composite_ = true;
  ord.vars_ = std::move(priority);
  ord.wt_.resize(ord.vars_.size());
  const int n = v.n();
  for (size_t k = 0; k < ord.vars_.size(); ++k) {
    int w = n + 1 - ord.vars_[k].i - v(ord.vars_[k].j);
    if (w <= 0)
      throw input_error("composite order: nonpositive weight at a variable");
    ord.wt_[k] = w;
  }
  return ord;
}

TermOrder TermOrder::pure_lex(std::vector<Box> priority) {
  TermOrder ord;
  ord.composite_ = false;
  ord.vars_ = std::move(priority);
  ord.wt_.assign(ord.vars_.size(), 0);
  return ord;
}

int TermOrder::var_index(Box b) const {
  for (size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k] == b) return static_cast<int>(k);
  throw input_error("variable z[" + std::to_string(b.i) + "][" + std::to_string(b.j) +
                    "] is outside this order's universe");
}

Monomial TermOrder::variable(Box b) const {
  Monomial m(nvars());
  int k = var_index(b);
  m.e_[k] = 1;
  m.wdeg_ = wt_[k];
  m.sdeg_ = 1;
  return m;
}

Monomial TermOrder::from_boxes(const std::vector<Box>& bs) const {
  Monomial m(nvars());
  for (Box b : bs) {
    int k = var_index(b);
    m.e_[k]++;
    m.wdeg_ += wt_[k];
    m.sdeg_ += 1;
  }
  return m;
}

Monomial TermOrder::mul(const Monomial& a, const Monomial& b) const {
  Monomial m(nvars());
  for (int k = 0; k < nvars(); ++k)
    m.e_[k] = static_cast<std::uint16_t>(a.e_[k] + b.e_[k]);
  m.wdeg_ = a.wdeg_ + b.wdeg_;
  m.sdeg_ = a.sdeg_ + b.sdeg_;
  return m;
}

Monomial TermOrder::div(const Monomial& a, const Monomial& b) const {
  Monomial m(nvars());
  for (int k = 0; k < nvars(); ++k) {
    if (a.e_[k] < b.e_[k]) throw input_error("monomial division is not exact");
    m.e_[k] = static_cast<std::uint16_t>(a.e_[k] - b.e_[k]);
  }
  m.wdeg_ = a.wdeg_ - b.wdeg_;
  m.sdeg_ = a.sdeg_ - b.sdeg_;
  return m;
}

bool TermOrder::divides(const Monomial& a, const Monomial& b) const {
  if (a.sdeg_ > b.sdeg_) return false;
  for (int k = 0; k < nvars(); ++k)
    if (a.e_[k] > b.e_[k]) return false;
  return true;
}

Monomial TermOrder::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m(nvars());
  for (int k = 0; k < nvars(); ++k) {
    m.e_[k] = std::max(a.e_[k], b.e_[k]);
    m.wdeg_ += m.e_[k] * wt_[k];
    m.sdeg_ += m.e_[k];
  }
  return m;
}

bool TermOrder::coprime(const Monomial& a, const Monomial& b) const {
  for (int k = 0; k < nvars(); ++k)
    if (a.e_[k] && b.e_[k]) return false;
  return true;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (composite_) {
    if (a.wdeg_ != b.wdeg_) return a.wdeg_ <=> b.wdeg_;
    // lower standard degree is the larger monomial
    if (a.sdeg_ != b.sdeg_) return b.sdeg_ <=> a.sdeg_;
  }
  for (int k = 0; k < nvars(); ++k)
    if (a.e_[k] != b.e_[k]) return a.e_[k] <=> b.e_[k];
  return std::strong_ordering::equal;
}

std::string TermOrder::monomial_str(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string s;
  for (int k = 0; k < nvars(); ++k) {
    if (!m.exp(k)) continue;
    if (!s.empty()) s += "*";
    Box b = vars_[k];
    s += "z[" + std::to_string(b.i) + "][" + std::to_string(b.j) + "]";
    if (m.exp(k) > 1) s += "^" + std::to_string(m.exp(k));
  }
  return s;
}

bool Polynomial::equals(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t k = 0; k < terms_.size(); ++k)
    if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coef != o.terms_[k].coef)
      return false;
  return true;
}

Polynomial Polynomial::axpy(const Polynomial& f, const BigRat& c, const Monomial& m,
                            const Polynomial& g, const TermOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  size_t a = 0, b = 0;
  while (a < f.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(f.terms_[a++]);
      continue;
    }
    Monomial gm = ord.mul(m, g.terms_[b].mono);
    if (a == f.size()) {
      out.push_back({std::move(gm), -c * g.terms_[b].coef});
      b++;
      continue;
    }
    auto cmp = ord.compare(f.terms_[a].mono, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(f.terms_[a++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({std::move(gm), -c * g.terms_[b].coef});
      b++;
    } else {
      BigRat coef = f.terms_[a].coef - c * g.terms_[b].coef;
      if (coef != 0) out.push_back({std::move(gm), std::move(coef)});
      a++;
      b++;
    }
  }
  return Polynomial(std::move(out));
}

void Polynomial::make_primitive() {
  if (terms_.empty()) return;
  BigInt den_lcm = 1, num_gcd = 0;
  for (const Term& t : terms_) {
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         BigInt(boost::multiprecision::denominator(t.coef)));
  }
  for (const Term& t : terms_) {
    BigInt num = BigInt(boost::multiprecision::numerator(t.coef)) * den_lcm /
                 BigInt(boost::multiprecision::denominator(t.coef));
    num_gcd = boost::multiprecision::gcd(num_gcd, num);
  }
  if (num_gcd == 0) return;
  BigRat scale(den_lcm, num_gcd);
  if (terms_.front().coef < 0) scale = -scale;
  for (Term& t : terms_) t.coef *= scale;
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  BigRat inv = BigRat(1) / terms_.front().coef;
  for (Term& t : terms_) t.coef *= inv;
}

bool Polynomial::usual_action_homogeneous(const TermOrder& ord,
                                          const Permutation& v) const {
  if (terms_.empty()) return true;
  const int n = v.n();
  auto weight_vec = [&](const Monomial& m) {
    std::vector<int> wv(n + 1, 0);
    for (int k = 0; k < ord.nvars(); ++k) {
      if (!m.exp(k)) continue;
      Box b = ord.var_box(k);
      wv[v(b.j)] += m.exp(k);
      wv[n + 1 - b.i] -= m.exp(k);
    }
    return wv;
  };
  auto ref = weight_vec(terms_.front().mono);
  for (const Term& t : terms_)
    if (weight_vec(t.mono) != ref) return false;
  return true;
}

bool Polynomial::standard_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.total_degree();
  for (const Term& t : terms_)
    if (t.mono.total_degree() != d) return false;
  return true;
}

std::string Polynomial::str(const TermOrder& ord) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    BigRat c = t.coef;
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string m = ord.monomial_str(t.mono);
    if (c != 1) {
      s += c.str();
      if (m != "1") s += "*" + m;
    } else {
      s += m;
    }
  }
  return s;
}

Polynomial minor_determinant(const SpecializedMatrix& z, const std::vector<int>& rows,
                             const std::vector<int>& cols, const TermOrder& ord) {
  const size_t r = rows.size();
  if (r != cols.size()) throw input_error("minor: non-square row/column sets");

  // Row-by-row Laplace expansion; a One pivots without contributing a
  // variable, a Zero prunes the branch.
  std::map<std::vector<Box>, long> acc;  // sorted box list -> signed count
  std::vector<int> colstate(r, 0);       // 1 = struck
  std::vector<Box> chosen;

  auto rec = [&](auto&& self, size_t row_idx, int sign) -> void {
    if (row_idx == r) {
      std::vector<Box> key = chosen;
      std::sort(key.begin(), key.end());
      acc[key] += sign;
      return;
    }
    int i = rows[row_idx];
    int parity = 1;
    for (size_t c = 0; c < r; ++c) {
      if (colstate[c]) continue;
      int j = cols[c];
      Cell cell = z.at(i, j);
      if (cell != Cell::Zero) {
        colstate[c] = 1;
        if (cell == Cell::Var) chosen.push_back({i, j});
        self(self, row_idx + 1, sign * parity);
        if (cell == Cell::Var) chosen.pop_back();
        colstate[c] = 0;
      }
      parity = -parity;
    }
  };
  rec(rec, 0, 1);

  std::vector<Term> terms;
  for (const auto& [boxes, c] : acc) {
    if (c == 0) continue;
    terms.push_back({ord.from_boxes(boxes), BigRat(c)});
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) == std::strong_ordering::greater;
  });
  return Polynomial(std::move(terms));
}

namespace {

std::vector<Polynomial> essential_minors(const SpecializedMatrix& z,
                                         const Permutation& w, const TermOrder& ord) {
  RankMatrix rw(w);
  std::vector<Polynomial> gens;
  for (Box e : essential_set(w)) {
    const int size = rw(e.i, e.j) + 1;
    if (size > e.i || size > e.j) continue;  // no minors of that size fit
    std::vector<int> rowsel(size), colsel(size);
    // all ascending row subsets of {1..e.i} and column subsets of {1..e.j}
    auto next_subset = [](std::vector<int>& s, int limit) {
      int k = static_cast<int>(s.size()) - 1;
      while (k >= 0 && s[k] == limit - (static_cast<int>(s.size()) - 1 - k)) k--;
      if (k < 0) return false;
      s[k]++;
      for (size_t t = k + 1; t < s.size(); ++t) s[t] = s[t - 1] + 1;
      return true;
    };
    for (int t = 0; t < size; ++t) rowsel[t] = t + 1;
    do {
      for (int t = 0; t < size; ++t) colsel[t] = t + 1;
      do {
        Polynomial p = minor_determinant(z, rowsel, colsel, ord);
        if (!p.is_zero()) gens.push_back(std::move(p));
      } while (next_subset(colsel, e.j));
    } while (next_subset(rowsel, e.i));
  }
  return gens;
}

}  // namespace

std::vector<Polynomial> kl_generators(const Permutation& v, const Permutation& w,
                                      const TermOrder& ord) {
  if (v.n() != w.n()) throw input_error("kl_generators: size mismatch");
  if (!bruhat_leq(v, w))
    throw input_error("e_v is not in X_w (v is not <= w in Bruhat order)");
  return essential_minors(build_zv(v), w, ord);
}

std::vector<Polynomial> schubert_determinantal_generators(const Permutation& w,
                                                          const TermOrder& ord) {
  return essential_minors(generic_matrix(w.n()), w, ord);
}

TermOrder covex_order(const Permutation& v, const Permutation& w) {
  ShuffleData sd = shuffle_data(v, w);
  return TermOrder::composite(v, sd.pi_order);
}

TermOrder composite_reading_order(const Permutation& v, Reading r) {
  return TermOrder::composite(v, reading_order(build_zv(v), r));
}

}  // namespace klmult

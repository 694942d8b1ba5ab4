#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "klmult/bigint.hpp"
#include "klmult/permutation.hpp"

namespace klmult {

// One cell of the specialized matrix Z^(v).
enum class Cell : std::uint8_t { Zero, One, Var };

// Z^(v): column j carries a 1 at row n-v(j)+1, zeros right of the 1 in its
// row and above the 1 in its column, free variables elsewhere. The free
// positions are exactly the Rothe diagram of v, l(w0 v) of them.
struct SpecializedMatrix {
  int n = 0;
  std::vector<Cell> cells;  // (i-1)*n + (j-1)
  Cell at(int i, int j) const { return cells[(i - 1) * n + (j - 1)]; }
  std::vector<Box> var_positions() const;  // sorted
  std::string str() const;                 // printed bottom row last
};

SpecializedMatrix build_zv(const Permutation& v);
SpecializedMatrix generic_matrix(int n);

// Variable reading patterns that induce the pure lexicographic shufflings.
// sw_ne reads rows bottom to top, each left to right; se_nw reads columns
// right to left, each bottom to top. First-read variables get the highest
// priority.
enum class Reading { SwNe, SeNw };
std::vector<Box> reading_order(const SpecializedMatrix& z, Reading r);

// Monomial in a fixed variable universe. Exponents are stored in priority
// order (index 0 = highest-priority variable of the owning TermOrder);
// the weight and standard degree are cached for comparisons.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}

  int exp(int idx) const { return e_[idx]; }
  const std::vector<std::uint16_t>& exps() const { return e_; }
  int weight() const { return wdeg_; }
  int total_degree() const { return sdeg_; }
  bool is_unit() const { return sdeg_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }

 private:
  friend class TermOrder;
  std::vector<std::uint16_t> e_;
  int wdeg_ = 0;
  int sdeg_ = 0;
};

// Total order on monomials over a fixed universe.
//
// Composite (the order attached to a Kazhdan-Lusztig pair): m1 < m2 when
//   (a) weight(m1) < weight(m2), with deg z_ij = n+1-i-v(j); or
//   (b) weights tie and m1 has the LARGER standard degree; or
//   (c) both tie and m1 has the smaller exponent at the first priority
//       variable where they differ.
// PureLex: (c) alone.
class TermOrder {
 public:
  static TermOrder composite(const Permutation& v, std::vector<Box> priority);
  static TermOrder pure_lex(std::vector<Box> priority);

  int nvars() const { return static_cast<int>(vars_.size()); }
  bool is_composite() const { return composite_; }
  int var_index(Box b) const;             // throws on foreign variables
  Box var_box(int idx) const { return vars_[idx]; }
  const std::vector<Box>& priority() const { return vars_; }

  Monomial unit() const { return Monomial(nvars()); }
  Monomial variable(Box b) const;
  Monomial from_boxes(const std::vector<Box>& bs) const;

  Monomial mul(const Monomial& a, const Monomial& b) const;
  // a / b; requires divisibility
  Monomial div(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  bool coprime(const Monomial& a, const Monomial& b) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  std::string monomial_str(const Monomial& m) const;

 private:
  std::vector<Box> vars_;   // priority order, highest first
  std::vector<int> wt_;     // weight per variable (composite only)
  bool composite_ = false;
};

struct Term {
  Monomial mono;
  BigRat coef;
};

// Sparse polynomial over exact rationals; terms kept sorted descending under
// the owning TermOrder, lead term first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& terms() { return terms_; }

  bool equals(const Polynomial& o) const;

  // f - c * m * g, merged under ord.
  static Polynomial axpy(const Polynomial& f, const BigRat& c, const Monomial& m,
                         const Polynomial& g, const TermOrder& ord);

  // Scale so coefficients are coprime integers and the lead is positive.
  void make_primitive();
  void make_monic();

  // Usual-action homogeneity: all terms share the weight vector
  // sum_e (t_{v(j)} - t_{n+1-i}).
  bool usual_action_homogeneous(const TermOrder& ord, const Permutation& v) const;
  bool standard_homogeneous() const;

  std::string str(const TermOrder& ord) const;

 private:
  std::vector<Term> terms_;
};

// Expanded determinant of the sub-matrix of z on rows/cols (ascending),
// terms sorted under ord. Zero cells prune, One cells pivot.
Polynomial minor_determinant(const SpecializedMatrix& z, const std::vector<int>& rows,
                             const std::vector<int>& cols, const TermOrder& ord);

// All size r^w_e + 1 minors of the southwest submatrices at the essential
// boxes of w, over Z^(v); zero minors dropped. Requires v <= w.
std::vector<Polynomial> kl_generators(const Permutation& v, const Permutation& w,
                                      const TermOrder& ord);

// Essential minors of the fully generic matrix.
std::vector<Polynomial> schubert_determinantal_generators(const Permutation& w,
                                                          const TermOrder& ord);

// The term order of the covexillary Groebner theorem: composite with the
// priority read off the rho/chi-shuffled matrix.
TermOrder covex_order(const Permutation& v, const Permutation& w);

// Composite order with a plain reading of Z^(v) (the general-case sweeps).
TermOrder composite_reading_order(const Permutation& v, Reading r);

}  // namespace klmult

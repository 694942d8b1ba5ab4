#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace klmult {

// Grid box (i,j): i is the row counted from the BOTTOM of the n x n grid,
// j the column from the left, both 1-based. (1,1) is the southwest corner.
// All grid renderings print row n first and row 1 last.
struct Box {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Permutation of S_n in one-line notation, w(j) = word[j-1].
// The graph dot of column j sits at box (n - w(j) + 1, j).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  // Digit string for n <= 9 ("7531462"), comma-separated list otherwise.
  static Permutation parse(const std::string& text);
  static Permutation identity(int n);
  static Permutation longest(int n);  // w0: j -> n+1-j

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int j) const { return word_[j - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  // Composition (v*w)(j) = v(w(j)).
  friend Permutation operator*(const Permutation& v, const Permutation& w);

  bool is_identity() const;
  std::string str() const;  // same format parse() accepts

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// r[i][j] = number of graph dots in the southwest i x j rectangle.
class RankMatrix {
 public:
  explicit RankMatrix(const Permutation& w);
  int n() const { return n_; }
  // 1 <= i,j <= n; out-of-range south/west queries return 0.
  int operator()(int i, int j) const;

 private:
  int n_ = 0;
  std::vector<int> r_;
};

struct Diagram {
  int n = 0;
  std::vector<Box> boxes;  // sorted
  bool contains(Box b) const;
};

// Weakly decreasing positive parts; may be empty.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const;  // 1-based row length, 0 beyond the last row
  const std::vector<int>& parts() const { return parts_; }
  long size() const;  // |lambda|
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Row bounds b_1 <= ... <= b_l attached to a partition with l rows.
struct FlagVector {
  std::vector<int> bounds;
  int operator[](int i) const { return bounds[i - 1]; }  // 1-based
  int rows() const { return static_cast<int>(bounds.size()); }
  std::string str() const;
  friend auto operator<=>(const FlagVector&, const FlagVector&) = default;
};

int length(const Permutation& w);  // inversion count
RankMatrix rank_matrix(const Permutation& w);

// Entrywise rank-matrix comparison (Bruhat order).
bool bruhat_leq(const Permutation& v, const Permutation& w);

Diagram rothe_diagram(const Permutation& w);
std::vector<Box> essential_set(const Permutation& w);

// 3412-avoidance.
bool is_covexillary(const Permutation& w);

// Sorted row lengths of D(w); requires covexillary input.
Partition shape_lambda(const Permutation& w);

// Smallest French-notation Young diagram anchored at (1,1) that contains
// all of E(w) and the box (1,1) itself.
Partition bounding_B(const Permutation& w);

// b_i = max{ m : B(w)_m >= lambda_i + m - i }.
FlagVector flag_b(const Permutation& w);

// The permutation with unique ascent at position d whose shape is lambda;
// lambda = {} yields w0. lambda must fit in the (n-d) x d box.
Permutation cograssmannian_from_partition(const Partition& lambda, int d, int n);

// Enumeration helpers shared by tests, sweeps and the CLI.
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> bruhat_lower_interval(const Permutation& w);

// ASCII picture of the n x n grid with the dots of w and the boxes of D(w),
// printed bottom row last.
std::string diagram_picture(const Permutation& w);

}  // namespace klmult

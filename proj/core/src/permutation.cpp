#include "klmult/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "klmult/errors.hpp"

namespace klmult {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n == 0) throw input_error("empty permutation");
  std::vector<char> seen(n + 1, 0);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x]) {
      throw input_error("word is not a bijection of 1.." + std::to_string(n));
    }
    seen[x] = 1;
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> word;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      size_t pos = 0;
      int x;
      try {
        x = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw input_error("bad permutation entry '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) pos++;
      if (pos != tok.size()) throw input_error("bad permutation entry '" + tok + "'");
      word.push_back(x);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw input_error("digit-form permutations use digits 1..9 only; "
                          "use the comma form for n >= 10");
      }
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = n + 1 - j;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int j = 1; j <= n(); ++j) inv[word_[j - 1] - 1] = j;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw input_error("size mismatch in composition");
  std::vector<int> word(v.n());
  for (int j = 1; j <= v.n(); ++j) word[j - 1] = v(w(j));
  return Permutation(std::move(word));
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= n(); ++j)
    if (word_[j - 1] != j) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  if (n() <= 9) {
    for (int x : word_) s += static_cast<char>('0' + x);
  } else {
    for (size_t k = 0; k < word_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(word_[k]);
    }
  }
  return s;
}

int length(const Permutation& w) {
  int inv = 0;
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (w(a) > w(b)) inv++;
  return inv;
}

RankMatrix::RankMatrix(const Permutation& w) : n_(w.n()), r_(n_ * n_, 0) {
  // Dot of column j is at row n - w(j) + 1; prefix-sum the dot grid.
  std::vector<int> dotrow(n_ + 1);
  for (int j = 1; j <= n_; ++j) dotrow[j] = n_ - w(j) + 1;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      int here = (dotrow[j] == i) ? 1 : 0;
      int above = (i > 1) ? r_[(i - 2) * n_ + (j - 1)] : 0;
      int left = (j > 1) ? r_[(i - 1) * n_ + (j - 2)] : 0;
      int diag = (i > 1 && j > 1) ? r_[(i - 2) * n_ + (j - 2)] : 0;
      r_[(i - 1) * n_ + (j - 1)] = here + above + left - diag;
    }
  }
}

int RankMatrix::operator()(int i, int j) const {
  if (i < 1 || j < 1) return 0;
  if (i > n_ || j > n_) throw input_error("rank matrix index out of range");
  return r_[(i - 1) * n_ + (j - 1)];
}

bool Diagram::contains(Box b) const {
  return std::binary_search(boxes.begin(), boxes.end(), b);
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw input_error("size mismatch in Bruhat comparison");
  RankMatrix rv(v), rw(w);
  for (int i = 1; i <= v.n(); ++i)
    for (int j = 1; j <= v.n(); ++j)
      if (rv(i, j) > rw(i, j)) return false;
  return true;
}

Diagram rothe_diagram(const Permutation& w) {
  const int n = w.n();
  Permutation winv = w.inverse();
  Diagram d;
  d.n = n;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (i < n - w(j) + 1 && j < winv(n - i + 1)) d.boxes.push_back({i, j});
    }
  }
  std::sort(d.boxes.begin(), d.boxes.end());
  return d;
}

std::vector<Box> essential_set(const Permutation& w) {
  Diagram d = rothe_diagram(w);
  std::vector<Box> ess;
  for (Box b : d.boxes) {
    if (!d.contains({b.i + 1, b.j}) && !d.contains({b.i, b.j + 1})) ess.push_back(b);
  }
  return ess;
}

bool is_covexillary(const Permutation& w) {
  const int n = w.n();
  // Direct O(n^4) scan for a 3412 pattern: w(i3) < w(i4) < w(i1) < w(i2).
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      if (w(i1) >= w(i2)) continue;
      for (int i3 = i2 + 1; i3 <= n; ++i3) {
        if (w(i3) >= w(i1)) continue;
        for (int i4 = i3 + 1; i4 <= n; ++i4)
          if (w(i3) < w(i4) && w(i4) < w(i1)) return false;
      }
    }
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1]))
      throw input_error("partition parts must be weakly decreasing and positive");
  }
}

int Partition::operator[](int i) const {
  return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
}

long Partition::size() const {
  long s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

std::string FlagVector::str() const {
  std::string s = "(";
  for (size_t k = 0; k < bounds.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(bounds[k]);
  }
  return s + ")";
}

Partition shape_lambda(const Permutation& w) {
  if (!is_covexillary(w)) throw input_error("shape_lambda: w is not covexillary");
  Diagram d = rothe_diagram(w);
  std::vector<int> rowlen(w.n() + 1, 0);
  for (Box b : d.boxes) rowlen[b.i]++;
  std::vector<int> parts;
  for (int i = 1; i <= w.n(); ++i)
    if (rowlen[i]) parts.push_back(rowlen[i]);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

Partition bounding_B(const Permutation& w) {
  if (!is_covexillary(w)) throw input_error("bounding_B: w is not covexillary");
  std::vector<Box> ess = essential_set(w);
  int top = 1;  // B always contains the box (1,1)
  for (Box e : ess) top = std::max(top, e.i);
  std::vector<int> rows(top, 0);
  for (int m = 1; m <= top; ++m) {
    int len = (m == 1) ? 1 : 0;
    for (Box e : ess)
      if (e.i >= m) len = std::max(len, e.j);
    rows[m - 1] = len;
  }
  return Partition(std::move(rows));
}

FlagVector flag_b(const Permutation& w) {
  Partition lambda = shape_lambda(w);
  Partition B = bounding_B(w);
  FlagVector b;
  for (int i = 1; i <= lambda.rows(); ++i) {
    int best = 0;
    for (int m = 1; m <= B.rows(); ++m)
      if (B[m] >= lambda[i] + m - i) best = m;
    if (best == 0) throw crosscheck_error("flag_b: no row of B accommodates row " +
                                          std::to_string(i));
    b.bounds.push_back(best);
  }
  return b;
}

Permutation cograssmannian_from_partition(const Partition& lambda, int d, int n) {
  if (d < 1 || d >= n) throw input_error("cograssmannian: need 1 <= d < n");
  if (lambda.rows() == 0) return Permutation::longest(n);
  if (lambda.rows() > n - d || lambda[1] > d)
    throw input_error("cograssmannian: lambda does not fit in the (n-d) x d box");

  // Unique-ascent permutations are determined by the value set of the first
  // d positions (both blocks decreasing); search d-subsets for the shape.
  std::vector<int> indicator(n, 0);
  std::fill(indicator.begin(), indicator.begin() + d, 1);
  do {
    std::vector<int> first, second;
    for (int x = n; x >= 1; --x) {
      if (indicator[x - 1]) first.push_back(x);
      else second.push_back(x);
    }
    std::vector<int> word = first;
    word.insert(word.end(), second.begin(), second.end());
    Permutation w(std::move(word));
    if (w(d) >= w(d + 1)) continue;  // no ascent at d (the w0-like subset)
    if (is_covexillary(w) && shape_lambda(w) == lambda) return w;
  } while (std::prev_permutation(indicator.begin(), indicator.end()));
  throw input_error("cograssmannian: no unique-ascent permutation realizes " +
                    lambda.str());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> bruhat_lower_interval(const Permutation& w) {
  std::vector<Permutation> out;
  for (const Permutation& v : all_permutations(w.n()))
    if (bruhat_leq(v, w)) out.push_back(v);
  return out;
}

std::string diagram_picture(const Permutation& w) {
  const int n = w.n();
  Diagram d = rothe_diagram(w);
  std::string out;
  for (int i = n; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      if (n - w(j) + 1 == i) out += " @";
      else if (d.contains({i, j})) out += " #";
      else out += " .";
    }
    out += '\n';
  }
  return out;
}

}  // namespace klmult

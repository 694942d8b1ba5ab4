#include "klmult/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "klmult/covex.hpp"
#include "klmult/errors.hpp"

namespace klmult {

std::string FlaggedTableau::str() const {
  std::string s;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(row[c]);
    }
    s += '\n';
  }
  return s;
}

long SetValuedTableau::total_entries() const {
  long k = 0;
  for (const auto& row : sets)
    for (const auto& box : row) k += static_cast<long>(box.size());
  return k;
}

std::string SetValuedTableau::str() const {
  std::string s;
  for (const auto& row : sets) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += '{';
      for (size_t e = 0; e < row[c].size(); ++e) {
        if (e) s += ',';
        s += std::to_string(row[c][e]);
      }
      s += '}';
    }
    s += '\n';
  }
  return s;
}

std::string PipeDream::str() const {
  int top = region.rows();
  std::string s;
  for (int i = top; i >= 1; --i) {
    for (int j = 1; j <= region[i]; ++j) {
      bool plus = std::binary_search(plusses.begin(), plusses.end(), Box{i, j});
      s += plus ? " +" : " .";
    }
    s += '\n';
  }
  return s;
}

std::vector<FlaggedTableau> enumerate_flagged_ssyt(const Partition& lambda,
                                                   const FlagVector& b) {
  if (b.rows() != lambda.rows())
    throw input_error("flag length does not match the partition");
  std::vector<FlaggedTableau> out;
  FlaggedTableau t;
  t.shape = lambda;
  t.rows.resize(lambda.rows());
  for (int r = 1; r <= lambda.rows(); ++r) t.rows[r - 1].resize(lambda[r]);

  // Row-major backtracking, values tried ascending: output is row-reading
  // lexicographic.
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r > lambda.rows()) {
      out.push_back(t);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc > lambda[r]) {
      nr = r + 1;
      nc = 1;
    }
    int lo = 1;
    if (c > 1) lo = std::max(lo, t.at(r, c - 1));
    if (r > 1 && lambda[r - 1] >= c) lo = std::max(lo, t.at(r - 1, c) + 1);
    for (int val = lo; val <= b[r]; ++val) {
      t.rows[r - 1][c - 1] = val;
      self(self, nr, nc);
    }
  };
  if (lambda.rows() == 0) {
    out.push_back(t);
  } else {
    rec(rec, 1, 1);
  }
  return out;
}

BigInt count_flagged_ssyt(const Partition& lambda, const FlagVector& b) {
  return BigInt(enumerate_flagged_ssyt(lambda, b).size());
}

BigInt det_multiplicity(const Partition& lambda, const FlagVector& b) {
  if (b.rows() != lambda.rows())
    throw input_error("flag length does not match the partition");
  const int l = lambda.rows();
  if (l == 0) return 1;
  std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      m[i - 1][j - 1] = binomial(b[i] + lambda[i] - i + j - 1, lambda[i] - i + j);

  // Fraction-free Gaussian elimination (Bareiss).
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < l - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < l; ++r)
        if (m[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int r = k + 1; r < l; ++r)
      for (int c = k + 1; c < l; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * m[l - 1][l - 1];
}

std::vector<SetValuedTableau> enumerate_set_valued(const Partition& lambda,
                                                   const FlagVector& b, long k) {
  if (b.rows() != lambda.rows())
    throw input_error("flag length does not match the partition");
  std::vector<SetValuedTableau> out;
  long boxes = lambda.size();
  if (k < boxes) return out;

  SetValuedTableau t;
  t.shape = lambda;
  t.sets.resize(lambda.rows());
  for (int r = 1; r <= lambda.rows(); ++r) t.sets[r - 1].resize(lambda[r]);
  if (lambda.rows() == 0) {
    if (k == 0) out.push_back(t);
    return out;
  }

  // remaining_min[idx] = number of boxes from idx on (each needs >= 1 entry)
  std::vector<std::pair<int, int>> order;  // (r, c) row-major
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda[r]; ++c) order.push_back({r, c});

  auto rec = [&](auto&& self, size_t idx, long used) -> void {
    if (idx == order.size()) {
      if (used == k) out.push_back(t);
      return;
    }
    auto [r, c] = order[idx];
    long boxes_left = static_cast<long>(order.size() - idx);
    if (used + boxes_left > k) return;
    int lo = 1;
    if (c > 1) lo = std::max(lo, t.sets[r - 1][c - 2].back());       // weak right
    if (r > 1 && lambda[r - 1] >= c) lo = std::max(lo, t.sets[r - 2][c - 1].back() + 1);
    int hi = b[r];
    if (lo > hi) return;
    // choose a non-empty subset of {lo..hi} by bitmask, ascending
    int width = hi - lo + 1;
    for (std::uint32_t mask = 1; mask < (1u << width); ++mask) {
      long sz = __builtin_popcount(mask);
      if (used + sz + (boxes_left - 1) > k) continue;
      std::vector<int> s;
      for (int bit = 0; bit < width; ++bit)
        if (mask & (1u << bit)) s.push_back(lo + bit);
      t.sets[r - 1][c - 1] = std::move(s);
      self(self, idx + 1, used + sz);
    }
    t.sets[r - 1][c - 1].clear();
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly g_poly(const Partition& lambda, const FlagVector& b) {
  long kmax = 0;  // no box holds more than b_row entries
  for (int r = 1; r <= lambda.rows(); ++r) kmax += static_cast<long>(lambda[r]) * b[r];
  UniPoly g;
  long base = lambda.size();
  for (long k = base; k <= std::max(base, kmax); ++k) {
    BigInt cnt(enumerate_set_valued(lambda, b, k).size());
    if (cnt == 0) continue;
    BigInt s = ((k - base) % 2) ? -cnt : cnt;
    g = g + UniPoly::one_minus_t_pow(static_cast<int>(k)) * s;
  }
  return g;
}

std::vector<PipeDream> pipe_dreams(const Partition& region, const Partition& lambda) {
  for (int r = 1; r <= lambda.rows(); ++r)
    if (lambda[r] > region[r])
      throw input_error("pipe_dreams: lambda is not contained in the region");

  // Region cells indexed for 64-bit masks.
  std::vector<Box> cells;
  std::map<Box, int> idx;
  for (int i = 1; i <= region.rows(); ++i)
    for (int j = 1; j <= region[i]; ++j) {
      idx[{i, j}] = static_cast<int>(cells.size());
      cells.push_back({i, j});
    }
  if (cells.size() > 64) throw input_error("pipe_dreams: region too large");

  std::uint64_t init = 0;
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda[r]; ++c) init |= 1ull << idx[{r, c}];

  std::set<std::uint64_t> seen{init};
  std::vector<std::uint64_t> queue{init};
  auto in_region = [&](int i, int j) {
    return i >= 1 && i <= region.rows() && j >= 1 && j <= region[i];
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    std::uint64_t cur = queue[head];
    for (const Box& p : cells) {
      if (!(cur & (1ull << idx[p]))) continue;
      // move {+ at (i,j)} -> {+ at (i+1,j+1)} when the other three cells of
      // the 2x2 square are inside the region and empty
      if (!in_region(p.i, p.j + 1) || !in_region(p.i + 1, p.j) ||
          !in_region(p.i + 1, p.j + 1))
        continue;
      if (cur & (1ull << idx[{p.i, p.j + 1}])) continue;
      if (cur & (1ull << idx[{p.i + 1, p.j}])) continue;
      if (cur & (1ull << idx[{p.i + 1, p.j + 1}])) continue;
      std::uint64_t nxt =
          (cur & ~(1ull << idx[p])) | (1ull << idx[{p.i + 1, p.j + 1}]);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }

  std::vector<PipeDream> out;
  for (std::uint64_t mask : seen) {
    PipeDream pd;
    pd.region = region;
    for (size_t c = 0; c < cells.size(); ++c)
      if (mask & (1ull << c)) pd.plusses.push_back(cells[c]);
    out.push_back(std::move(pd));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlaggedTableau pipedream_to_tableau(const PipeDream& p, const Partition& lambda) {
  // Match, on each southwest-northeast diagonal, the m-th + from the
  // southwest with the m-th box of lambda on that diagonal; the entry is the
  // grid row of the +.
  std::map<int, std::vector<Box>> plus_by_diag, box_by_diag;
  for (Box b : p.plusses) plus_by_diag[b.j - b.i].push_back(b);
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda[r]; ++c) box_by_diag[c - r].push_back({r, c});

  FlaggedTableau t;
  t.shape = lambda;
  t.rows.resize(lambda.rows());
  for (int r = 1; r <= lambda.rows(); ++r) t.rows[r - 1].resize(lambda[r]);

  if (plus_by_diag.size() != box_by_diag.size())
    throw input_error("pipedream_to_tableau: diagonal multiset mismatch");
  for (auto& [d, boxes] : box_by_diag) {
    auto it = plus_by_diag.find(d);
    if (it == plus_by_diag.end() || it->second.size() != boxes.size())
      throw input_error("pipedream_to_tableau: diagonal multiset mismatch");
    std::sort(boxes.begin(), boxes.end());
    std::sort(it->second.begin(), it->second.end());
    for (size_t m = 0; m < boxes.size(); ++m)
      t.rows[boxes[m].i - 1][boxes[m].j - 1] = it->second[m].i;
  }

  // The moves preserve semistandardness; verify anyway.
  for (int r = 1; r <= lambda.rows(); ++r)
    for (int c = 1; c <= lambda[r]; ++c) {
      if (c > 1 && t.at(r, c) < t.at(r, c - 1))
        throw crosscheck_error("pipedream_to_tableau: row condition violated");
      if (r > 1 && lambda[r - 1] >= c && t.at(r, c) <= t.at(r - 1, c))
        throw crosscheck_error("pipedream_to_tableau: column condition violated");
    }
  return t;
}

PipeDream tableau_to_pipedream(const FlaggedTableau& t, const Partition& region) {
  PipeDream p;
  p.region = region;
  for (int r = 1; r <= t.shape.rows(); ++r)
    for (int c = 1; c <= t.shape[r]; ++c) {
      int e = t.at(r, c);
      p.plusses.push_back({e, c - r + e});
    }
  std::sort(p.plusses.begin(), p.plusses.end());
  return p;
}

BigInt multiplicity_covexillary(const Permutation& v, const Permutation& w) {
  Permutation th = theta(v, w);
  Partition lambda = shape_lambda(w);
  FlagVector b = flag_b(th);
  BigInt by_count = count_flagged_ssyt(lambda, b);
  BigInt by_det = det_multiplicity(lambda, b);
  if (by_count != by_det)
    throw crosscheck_error("multiplicity: tableau count and determinant disagree");
  return by_count;
}

HilbertSeries hilbert_series_covexillary(const Permutation& v, const Permutation& w) {
  Permutation th = theta(v, w);
  HilbertSeries h;
  h.numerator = g_poly(shape_lambda(w), flag_b(th));
  h.tangent_cone_exponent = length(Permutation::longest(v.n()) * v);
  h.local_ring_exponent = v.n() * (v.n() - 1) / 2;
  return h;
}

}  // namespace klmult

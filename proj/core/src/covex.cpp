#include "klmult/covex.hpp"

#include <algorithm>
#include <set>

#include "klmult/errors.hpp"

namespace klmult {

int EssentialMoves::total() const {
  int k = 0;
  for (const auto& [e, m] : move) k += m;
  return k;
}

Permutation transition(const Permutation& w, Box e0) {
  if (!is_covexillary(w)) throw input_error("transition: w is not covexillary");
  const int n = w.n();
  std::vector<Box> ess = essential_set(w);
  if (std::find(ess.begin(), ess.end(), e0) == ess.end())
    throw input_error("transition: box is not essential");
  RankMatrix r(w);
  if (r(e0.i, e0.j) <= 0) throw input_error("transition: essential rank is zero");

  // Northeast-most dot of w dominated by e0. Covexillarity makes the
  // row-maximal dominated dot also column-maximal; anything else is a bug
  // or a bad input, so fail loudly.
  Box d1{0, 0};
  for (int j = 1; j <= e0.j; ++j) {
    int i = n - w(j) + 1;
    if (i <= e0.i && i > d1.i) d1 = {i, j};
  }
  if (d1.i == 0) throw input_error("transition: no dominated dot");
  for (int j = 1; j <= e0.j; ++j) {
    int i = n - w(j) + 1;
    if (i <= e0.i && j > d1.j)
      throw input_error("transition: dominated dots have no unique NE corner "
                        "(non-covexillary data)");
  }

  const int j1 = d1.j;
  const int j2 = e0.j;
  const int j3 = w.inverse()(n + 1 - e0.i);
  std::vector<int> word = w.word();
  word[j1 - 1] = n + 1 - e0.i;
  word[j2 - 1] = w(j1);
  word[j3 - 1] = w(j2);
  return Permutation(std::move(word));
}

EssentialMoves essential_moves(const Permutation& v, const Permutation& w) {
  if (!is_covexillary(w)) throw input_error("essential_moves: w is not covexillary");
  if (!bruhat_leq(v, w)) throw input_error("essential_moves: v is not <= w");
  RankMatrix rv(v), rw(w);
  EssentialMoves em;
  for (Box e : essential_set(w)) {
    em.move[e] = rv(e.i, e.j);
    em.target_rank[e] = rw(e.i, e.j) - rv(e.i, e.j);
  }
  return em;
}

Permutation theta(const Permutation& v, const Permutation& w) {
  EssentialMoves em = essential_moves(v, w);
  Permutation cur = w;
  std::map<Box, int> remaining = em.move;

  while (true) {
    // Northmost, then eastmost box with moves left.
    Box pick{0, 0};
    for (const auto& [e, f] : remaining) {
      if (f > 0 && (e.i > pick.i || (e.i == pick.i && e.j > pick.j))) pick = e;
    }
    if (pick.i == 0) break;
    int f = remaining[pick];
    remaining.erase(pick);
    cur = transition(cur, pick);
    remaining[{pick.i - 1, pick.j - 1}] = f - 1;
  }

  // Postconditions of the construction, checked on every call.
  if (shape_lambda(cur) != shape_lambda(w))
    throw crosscheck_error("theta: shape changed");
  std::set<Box> expected;
  std::map<Box, int> expected_rank;
  for (const auto& [e, f] : em.move) {
    Box slid{e.i - f, e.j - f};
    expected.insert(slid);
    expected_rank[slid] = em.target_rank.at(e);
  }
  std::vector<Box> ess = essential_set(cur);
  if (std::set<Box>(ess.begin(), ess.end()) != expected)
    throw crosscheck_error("theta: essential set mismatch");
  RankMatrix rt(cur);
  for (const auto& [e, rk] : expected_rank)
    if (rt(e.i, e.j) != rk) throw crosscheck_error("theta: essential rank mismatch");
  return cur;
}

ShuffleData shuffle_data(const Permutation& v, const Permutation& w) {
  if (!is_covexillary(w)) throw input_error("shuffle_data: w is not covexillary");
  if (!bruhat_leq(v, w)) throw input_error("shuffle_data: v is not <= w");
  const int n = w.n();
  Partition lambda = shape_lambda(w);
  FlagVector b = flag_b(w);
  const int l = lambda.rows();

  // R_i, C_i per corner dominance; R_0 = {}, R_{l+1} = C_0 = {1..n},
  // C_{l+1} = {}. The filtration runs R_0 <= R_1 <= ... and C_0 >= C_1 >= ...
  std::vector<std::set<int>> R(l + 2), C(l + 2);
  for (int x = 1; x <= n; ++x) {
    R[l + 1].insert(x);
    C[0].insert(x);
  }
  for (int i = 1; i <= l; ++i) {
    const int corner_row = b[i];
    const int corner_col = lambda[i] - i + b[i];
    for (int x = 1; x <= corner_row; ++x) R[i].insert(x);
    for (int x = 1; x <= corner_col; ++x) C[i].insert(x);
    for (int beta = 1; beta <= n; ++beta) {
      int alpha = n + 1 - v(beta);  // the 1 of Z^(v) in column beta
      if (alpha <= corner_row && beta <= corner_col) {
        R[i].erase(alpha);
        C[i].erase(beta);
      }
    }
  }

  auto block_concat = [](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> word;
    for (const auto& blk : blocks) word.insert(word.end(), blk.begin(), blk.end());
    return Permutation(std::move(word));
  };

  std::vector<std::vector<int>> rho_blocks, chi_blocks;
  for (int i = 0; i <= l; ++i) {
    std::vector<int> blk;
    std::set_difference(R[i + 1].begin(), R[i + 1].end(), R[i].begin(), R[i].end(),
                        std::back_inserter(blk));
    rho_blocks.push_back(std::move(blk));
  }
  for (int i = l; i >= 0; --i) {
    std::vector<int> blk;
    std::set_difference(C[i].begin(), C[i].end(), C[i + 1].begin(), C[i + 1].end(),
                        std::back_inserter(blk));
    chi_blocks.push_back(std::move(blk));
  }

  ShuffleData sd;
  sd.rho = block_concat(rho_blocks);
  sd.chi = block_concat(chi_blocks);

  // Free positions of Z^(v): strictly below the 1 of the column and strictly
  // left of the 1 of the row, i.e. exactly the Rothe diagram of v.
  Permutation vinv = v.inverse();
  auto is_free = [&](int i, int j) {
    return i < n - v(j) + 1 && j < vinv(n + 1 - i);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int a = sd.rho(i), c = sd.chi(j);
      if (is_free(a, c)) sd.pi_order.push_back({a, c});
    }
  }
  return sd;
}

}  // namespace klmult

#include "klmult/monomial_ideal.hpp"

#include <algorithm>
#include <map>

#include "klmult/errors.hpp"

namespace klmult {

namespace {

bool exp_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<std::vector<int>> minimalize_gens(std::vector<std::vector<int>> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && exp_divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Box> universe,
                             std::vector<std::vector<int>> gens)
    : universe_(std::move(universe)) {
  for (auto& g : gens) {
    if (g.size() != universe_.size())
      throw input_error("monomial ideal generator over a different universe");
    bool zero = std::all_of(g.begin(), g.end(), [](int e) { return e == 0; });
    if (zero) throw input_error("the unit monomial cannot generate a proper ideal");
  }
  gens_ = minimalize_gens(std::move(gens));
}

bool MonomialIdeal::contains_monomial(const std::vector<int>& exps) const {
  for (const auto& g : gens_)
    if (exp_divides(g, exps)) return true;
  return false;
}

std::string MonomialIdeal::str() const {
  std::string s = "<";
  for (size_t g = 0; g < gens_.size(); ++g) {
    if (g) s += ", ";
    std::string m;
    for (size_t k = 0; k < universe_.size(); ++k) {
      if (!gens_[g][k]) continue;
      if (!m.empty()) m += "*";
      m += "z[" + std::to_string(universe_[k].i) + "][" +
           std::to_string(universe_[k].j) + "]";
      if (gens_[g][k] > 1) m += "^" + std::to_string(gens_[g][k]);
    }
    s += m.empty() ? "1" : m;
  }
  return s + ">";
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const auto& g : I.generators())
    for (int e : g)
      if (e > 1) return false;
  return true;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<std::vector<int>> gens;
  for (const auto& g : I.generators()) {
    std::vector<int> s(g.size());
    for (size_t k = 0; k < g.size(); ++k) s[k] = g[k] ? 1 : 0;
    gens.push_back(std::move(s));
  }
  return MonomialIdeal(I.universe(), std::move(gens));
}

std::vector<PrimeComponent> prime_decomposition(const MonomialIdeal& I) {
  if (!is_squarefree(I))
    throw input_error("prime decomposition requires a squarefree ideal");
  const int n = I.nvars();
  if (n > 64) throw input_error("prime decomposition: more than 64 variables");

  std::vector<std::uint64_t> supports;
  for (const auto& g : I.generators()) {
    std::uint64_t m = 0;
    for (int k = 0; k < n; ++k)
      if (g[k]) m |= 1ull << k;
    supports.push_back(m);
  }

  // Minimal transversals by recursive splitting on the generators, with
  // subsumption pruning.
  std::vector<std::uint64_t> covers{0};
  for (std::uint64_t sup : supports) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t c : covers) {
      if (c & sup) {
        next.push_back(c);
        continue;
      }
      for (int k = 0; k < n; ++k)
        if (sup & (1ull << k)) next.push_back(c | (1ull << k));
    }
    std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::uint64_t> pruned;
    for (std::uint64_t c : next) {
      bool subsumed = false;
      for (std::uint64_t p : pruned)
        if ((p & c) == p) {
          subsumed = true;
          break;
        }
      if (!subsumed) pruned.push_back(c);
    }
    covers = std::move(pruned);
  }

  std::vector<PrimeComponent> out;
  for (std::uint64_t c : covers) {
    PrimeComponent pc;
    for (int k = 0; k < n; ++k)
      if (c & (1ull << k)) pc.variables.push_back(k);
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

UniPoly k_poly_rec(std::vector<std::vector<int>> gens,
                   std::map<std::vector<std::vector<int>>, UniPoly>& memo) {
  gens = minimalize_gens(std::move(gens));
  if (gens.empty()) return UniPoly::one();
  auto it = memo.find(gens);
  if (it != memo.end()) return it->second;

  const size_t n = gens.front().size();

  // factor out generators that are bare variables
  int bare = 0;
  std::vector<std::vector<int>> rest;
  for (const auto& g : gens) {
    int total = 0;
    for (int e : g) total += e;
    if (total == 1) bare++;
    else rest.push_back(g);
  }
  UniPoly result;
  if (bare > 0) {
    result = UniPoly::one_minus_t_pow(bare) * k_poly_rec(std::move(rest), memo);
  } else {
    // pivot on the most frequent variable
    std::vector<int> freq(n, 0);
    for (const auto& g : gens)
      for (size_t k = 0; k < n; ++k)
        if (g[k]) freq[k]++;
    size_t x = std::max_element(freq.begin(), freq.end()) - freq.begin();

    std::vector<std::vector<int>> plus, colon;
    for (const auto& g : gens) {
      if (g[x] == 0) plus.push_back(g);
      auto h = g;
      if (h[x] > 0) h[x]--;
      colon.push_back(std::move(h));
    }
    std::vector<int> barex(n, 0);
    barex[x] = 1;
    plus.push_back(std::move(barex));
    result = k_poly_rec(std::move(plus), memo) +
             UniPoly({BigInt(0), BigInt(1)}) * k_poly_rec(std::move(colon), memo);
  }
  memo.emplace(std::move(gens), result);
  return result;
}

}  // namespace

UniPoly k_polynomial(const MonomialIdeal& I) {
  std::map<std::vector<std::vector<int>>, UniPoly> memo;
  return k_poly_rec(I.generators(), memo);
}

int dimension(const MonomialIdeal& I) {
  auto [c, q] = k_polynomial(I).strip_one_minus_t();
  (void)q;
  return I.nvars() - c;
}

BigInt degree(const MonomialIdeal& I) {
  auto [c, q] = k_polynomial(I).strip_one_minus_t();
  (void)c;
  return q.eval_one();
}

bool is_equidimensional(const MonomialIdeal& I) {
  auto primes = prime_decomposition(I);
  for (const auto& p : primes)
    if (p.variables.size() != primes.front().variables.size()) return false;
  return true;
}

}  // namespace klmult

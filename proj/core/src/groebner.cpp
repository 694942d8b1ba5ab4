#include "klmult/groebner.hpp"

#include <algorithm>
#include <set>

#include "klmult/errors.hpp"

namespace klmult {

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const TermOrder& ord) {
  Polynomial h = f;
  std::vector<Term> tail;
  while (!h.is_zero()) {
    const Term& lt = h.lead();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.is_zero() && ord.divides(g.lead().mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      BigRat c = lt.coef / divisor->lead().coef;
      Monomial m = ord.div(lt.mono, divisor->lead().mono);
      h = Polynomial::axpy(h, c, m, *divisor, ord);
    } else {
      tail.push_back(lt);
      h.terms().erase(h.terms().begin());
    }
  }
  return Polynomial(std::move(tail));
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  Monomial L = ord.lcm(f.lead().mono, g.lead().mono);
  Monomial mf = ord.div(L, f.lead().mono);
  Monomial mg = ord.div(L, g.lead().mono);
  // L/lt(f) * f - L/lt(g) * g, with unit lead coefficients factored in
  Polynomial a = Polynomial::axpy(Polynomial(), BigRat(-1) / f.lead().coef, mf, f, ord);
  return Polynomial::axpy(a, BigRat(1) / g.lead().coef, mg, g, ord);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const TermOrder& ord) {
  // drop elements whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!ord.divides(basis[j].lead().mono, basis[i].lead().mono)) continue;
      // equal leads: keep the first occurrence
      if (basis[i].lead().mono == basis[j].lead().mono) redundant = j < i;
      else redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each element against the others
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = reduce(minimal[i], others, ord);
    if (reduced[i].is_zero())
      throw crosscheck_error("interreduce: minimal element reduced to zero");
    reduced[i].make_monic();
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.lead().mono, b.lead().mono);
  });
  return reduced;
}

}  // namespace

BuchbergerResult buchberger(std::vector<Polynomial> gens, const TermOrder& ord) {
  BuchbergerResult result;
  std::vector<Polynomial> G;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    g.make_primitive();
    G.push_back(std::move(g));
  }

  struct Pair {
    Monomial lcm;
    size_t i, j;
  };
  auto worse = [&](const Pair& a, const Pair& b) {
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
    return std::pair(a.i, a.j) > std::pair(b.i, b.j);
  };
  std::vector<Pair> queue;  // max-heap on `worse`, so pop gives smallest lcm
  std::set<std::pair<size_t, size_t>> pending;

  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (ord.coprime(G[i].lead().mono, G[j].lead().mono)) continue;  // product criterion
      queue.push_back({ord.lcm(G[i].lead().mono, G[j].lead().mono), i, j});
      std::push_heap(queue.begin(), queue.end(), worse);
      pending.insert({i, j});
    }
  };
  for (size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(), worse);
    Pair p = queue.back();
    queue.pop_back();
    pending.erase({p.i, p.j});

    // chain criterion: some lead(k) divides the lcm and both side pairs are
    // already treated
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!ord.divides(G[k].lead().mono, p.lcm)) continue;
      auto key1 = std::minmax(p.i, k), key2 = std::minmax(p.j, k);
      if (!pending.count({key1.first, key1.second}) &&
          !pending.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(G[p.i], G[p.j], ord);
    Polynomial r = reduce(s, G, ord);
    if (!r.is_zero()) {
      result.input_was_groebner = false;
      r.make_primitive();
      G.push_back(std::move(r));
      push_pairs_for(G.size() - 1);
    }
  }

  result.basis = interreduce(std::move(G), ord);
  return result;
}

bool is_groebner(const std::vector<Polynomial>& gens, const TermOrder& ord) {
  std::vector<Polynomial> G;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) G.push_back(g);
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = i + 1; j < G.size(); ++j) {
      if (ord.coprime(G[i].lead().mono, G[j].lead().mono)) continue;
      Polynomial r = reduce(s_polynomial(G[i], G[j], ord), G, ord);
      if (!r.is_zero()) return false;
    }
  }
  return true;
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gb, const TermOrder& ord) {
  std::vector<std::vector<int>> gens;
  for (const Polynomial& g : gb) {
    if (g.is_zero()) continue;
    std::vector<int> e(ord.nvars());
    for (int k = 0; k < ord.nvars(); ++k) e[k] = g.lead().mono.exp(k);
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ord.priority(), std::move(gens));
}

}  // namespace klmult

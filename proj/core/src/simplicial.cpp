#include "klmult/simplicial.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "klmult/errors.hpp"

namespace klmult {

namespace {
int popcount(std::uint64_t m) { return __builtin_popcountll(m); }
}  // namespace

int SimplicialComplex::dim() const {
  int best = -1;
  for (std::uint64_t f : facets) best = std::max(best, popcount(f) - 1);
  return best;
}

SimplicialComplex from_ideal(const MonomialIdeal& I) {
  if (!is_squarefree(I)) throw input_error("from_ideal requires a squarefree ideal");
  if (I.nvars() > 64) throw input_error("from_ideal: more than 64 vertices");
  SimplicialComplex d;
  d.vertices = I.universe();
  std::uint64_t all = (I.nvars() == 64) ? ~0ull : ((1ull << I.nvars()) - 1);
  for (const PrimeComponent& p : prime_decomposition(I)) {
    std::uint64_t mask = 0;
    for (int k : p.variables) mask |= 1ull << k;
    d.facets.push_back(all & ~mask);
  }
  std::sort(d.facets.begin(), d.facets.end());
  return d;
}

bool is_pure(const SimplicialComplex& d) {
  for (std::uint64_t f : d.facets)
    if (popcount(f) != popcount(d.facets.front())) return false;
  return true;
}

namespace {

// (dim-1)-faces together with the number of facets containing each; only
// meaningful for pure complexes.
std::unordered_map<std::uint64_t, int> ridge_counts(const SimplicialComplex& d) {
  std::unordered_map<std::uint64_t, int> counts;
  for (std::uint64_t f : d.facets) {
    for (int k = 0; k < 64; ++k) {
      if (!(f & (1ull << k))) continue;
      std::uint64_t ridge = f & ~(1ull << k);
      counts[ridge]++;
    }
  }
  return counts;
}

}  // namespace

bool is_pseudomanifold(const SimplicialComplex& d) {
  if (!is_pure(d)) return false;
  if (d.facets.empty()) return false;
  if (d.dim() < 0) return true;  // {∅}
  for (const auto& [ridge, c] : ridge_counts(d))
    if (c > 2) return false;
  return true;
}

FaceCensus interior_census(const SimplicialComplex& d) {
  if (!is_pure(d)) throw input_error("interior_census requires a pure complex");
  if (d.facets.empty()) throw input_error("interior_census: void complex");
  const int s = popcount(d.facets.front());  // facet size = dim + 1

  std::vector<std::uint64_t> boundary_gens;
  if (s > 0) {
    for (const auto& [ridge, c] : ridge_counts(d))
      if (c == 1) boundary_gens.push_back(ridge);
  }

  // all faces, deduplicated
  std::unordered_set<std::uint64_t> faces;
  for (std::uint64_t f : d.facets) {
    // enumerate subsets of f
    std::uint64_t sub = f;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }

  FaceCensus census;
  census.boundary_empty = boundary_gens.empty();
  census.f_vector.assign(s + 1, 0);
  BigInt chi_reduced = 0;
  for (std::uint64_t face : faces) {
    int fs = popcount(face);
    census.f_vector[fs]++;
    chi_reduced += (fs % 2) ? 1 : -1;  // (-1)^(dim F) with dim = fs - 1
    bool interior = true;
    for (std::uint64_t b : boundary_gens) {
      if ((face & ~b) == 0) {
        interior = false;
        break;
      }
    }
    if (interior) {
      census.interior_by_codim[s - fs]++;
    } else {
      census.boundary_face_count++;
    }
  }
  census.reduced_euler = chi_reduced;

  // h-vector from the f-vector: sum_i f_{i-1} (x-1)^{s-i} = sum_j h_j x^{s-j}
  census.h_vector.assign(s + 1, 0);
  for (int i = 0; i <= s; ++i) {
    // expand f_vector[i] * (x-1)^(s-i)
    for (int j = 0; j <= s - i; ++j) {
      long c = binomial(s - i, j).convert_to<long>();
      census.h_vector[i + j] += census.f_vector[i] * ((j % 2) ? -1 : 1) * c;
    }
  }
  return census;
}

UniPoly g_from_interior(const SimplicialComplex& d, int shift) {
  FaceCensus census = interior_census(d);
  UniPoly g;
  for (const auto& [codim, count] : census.interior_by_codim) {
    BigInt c = (codim % 2) ? -count : count;
    g = g + UniPoly::one_minus_t_pow(shift + codim) * c;
  }
  return g;
}

namespace {

struct VDContext {
  std::unordered_map<std::string, bool> memo;
  long calls_left = 0;
};

// canonical key: facets after compressing to the used vertices
std::string vd_key(const std::vector<std::uint64_t>& facets) {
  std::string key;
  for (std::uint64_t f : facets) {
    key.append(reinterpret_cast<const char*>(&f), sizeof(f));
  }
  return key;
}

std::vector<std::uint64_t> compress(std::vector<std::uint64_t> facets) {
  std::uint64_t used = 0;
  for (std::uint64_t f : facets) used |= f;
  std::vector<int> map(64, -1);
  int next = 0;
  for (int k = 0; k < 64; ++k)
    if (used & (1ull << k)) map[k] = next++;
  for (auto& f : facets) {
    std::uint64_t g = 0;
    for (int k = 0; k < 64; ++k)
      if (f & (1ull << k)) g |= 1ull << map[k];
    f = g;
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets;
}

std::vector<std::uint64_t> maximal_faces(std::vector<std::uint64_t> faces) {
  std::sort(faces.begin(), faces.end(), [](std::uint64_t a, std::uint64_t b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : faces) {
    bool contained = false;
    for (std::uint64_t g : out)
      if ((f & ~g) == 0) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool vd_rec(std::vector<std::uint64_t> facets, VDContext& ctx) {
  if (--ctx.calls_left < 0) throw std::overflow_error("vd budget");
  facets = compress(facets);

  // factor out cone points (vertices in every facet)
  std::uint64_t common = ~0ull;
  for (std::uint64_t f : facets) common &= f;
  if (common) {
    for (auto& f : facets) f &= ~common;
    facets = compress(facets);
  }
  if (facets.size() <= 1) return true;  // simplex (or {∅})

  // purity
  for (std::uint64_t f : facets)
    if (popcount(f) != popcount(facets.front())) return false;

  std::string key = vd_key(facets);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  std::uint64_t used = 0;
  for (std::uint64_t f : facets) used |= f;

  bool ok = false;
  for (int v = 0; v < 64 && !ok; ++v) {
    std::uint64_t bit = 1ull << v;
    if (!(used & bit)) continue;
    std::vector<std::uint64_t> del, link;
    for (std::uint64_t f : facets) {
      if (f & bit) {
        del.push_back(f & ~bit);
        link.push_back(f & ~bit);
      } else {
        del.push_back(f);
      }
    }
    del = maximal_faces(std::move(del));
    link = maximal_faces(std::move(link));
    if (vd_rec(del, ctx) && vd_rec(link, ctx)) ok = true;
  }
  ctx.memo[key] = ok;
  return ok;
}

}  // namespace

VertexDecomposable is_vertex_decomposable(const SimplicialComplex& d, long budget) {
  if (d.facets.empty()) return VertexDecomposable::Yes;  // void complex
  VDContext ctx;
  ctx.calls_left = budget;
  try {
    return vd_rec(d.facets, ctx) ? VertexDecomposable::Yes : VertexDecomposable::No;
  } catch (const std::overflow_error&) {
    return VertexDecomposable::Indeterminate;
  }
}

}  // namespace klmult

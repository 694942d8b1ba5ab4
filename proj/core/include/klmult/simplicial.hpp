#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "klmult/bigint.hpp"
#include "klmult/monomial_ideal.hpp"
#include "klmult/unipoly.hpp"

namespace klmult {

// Stanley-Reisner complex of a squarefree monomial ideal. Vertices carry the
// ideal's universe labels; facets are vertex masks, pairwise incomparable.
struct SimplicialComplex {
  std::vector<Box> vertices;
  std::vector<std::uint64_t> facets;  // sorted

  int nverts() const { return static_cast<int>(vertices.size()); }
  int dim() const;  // -1 for the empty-face complex {∅}
};

SimplicialComplex from_ideal(const MonomialIdeal& I);

bool is_pure(const SimplicialComplex& d);
// Pure, and every (dim-1)-face lies in at most two facets.
bool is_pseudomanifold(const SimplicialComplex& d);

struct FaceCensus {
  std::map<int, long> interior_by_codim;  // codim k -> count
  long boundary_face_count = 0;
  std::vector<long> f_vector;  // f_vector[k] = #faces with k vertices, k = 0..dim+1
  std::vector<long> h_vector;
  BigInt reduced_euler;  // chi - 1: 0 for balls, +-1 for spheres
  bool boundary_empty = false;
};

// Boundary subcomplex: all faces of the (dim-1)-faces contained in exactly
// one facet. Interior faces are the faces not in it; the empty face is
// interior exactly when the boundary is empty. Requires a pure complex.
FaceCensus interior_census(const SimplicialComplex& d);

// G(t) = sum_k (-1)^k (1-t)^(shift+k) #{interior faces of codim k}.
UniPoly g_from_interior(const SimplicialComplex& d, int shift);

enum class VertexDecomposable { No, Yes, Indeterminate };

// Recursive Billera-Provan test. Cone points are factored out first;
// memoized; `budget` caps the number of recursive calls (exceeding it yields
// Indeterminate rather than a wrong answer).
VertexDecomposable is_vertex_decomposable(const SimplicialComplex& d,
                                          long budget = 2'000'000);

}  // namespace klmult

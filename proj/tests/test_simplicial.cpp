#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klmult/errors.hpp"
#include "klmult/simplicial.hpp"

using namespace klmult;

namespace {

std::vector<Box> make_universe(int nvars) {
  std::vector<Box> u;
  for (int k = 0; k < nvars; ++k) u.push_back({1, k + 1});
  return u;
}

std::vector<int> expvec(int nvars, std::initializer_list<int> vars_at_one) {
  std::vector<int> e(nvars, 0);
  for (int k : vars_at_one) e[k] = 1;
  return e;
}

MonomialIdeal example_55_ideal() {
  std::vector<std::vector<int>> gens;
  for (int k = 0; k < 6; ++k) gens.push_back(expvec(15, {k}));
  gens.push_back(expvec(15, {6, 7}));
  return MonomialIdeal(make_universe(15), gens);
}

SimplicialComplex complex_from_facets(int nverts, std::vector<std::uint64_t> facets) {
  SimplicialComplex d;
  d.vertices = make_universe(nverts);
  d.facets = std::move(facets);
  std::sort(d.facets.begin(), d.facets.end());
  return d;
}

}  // namespace

TEST_CASE("from_ideal") {
  SimplicialComplex d = from_ideal(example_55_ideal());
  CHECK(d.nverts() == 15);
  REQUIRE(d.facets.size() == 2);
  CHECK(__builtin_popcountll(d.facets[0]) == 8);
  CHECK(__builtin_popcountll(d.facets[1]) == 8);
  CHECK(d.dim() == 7);

  SimplicialComplex simplex = from_ideal(MonomialIdeal(make_universe(4), {}));
  REQUIRE(simplex.facets.size() == 1);
  CHECK(__builtin_popcountll(simplex.facets[0]) == 4);

  std::vector<std::vector<int>> allvars = {expvec(3, {0}), expvec(3, {1}),
                                           expvec(3, {2})};
  SimplicialComplex empty = from_ideal(MonomialIdeal(make_universe(3), allvars));
  REQUIRE(empty.facets.size() == 1);
  CHECK(empty.facets[0] == 0);  // the {∅} complex
  CHECK(empty.dim() == -1);

  CHECK_THROWS_AS(from_ideal(MonomialIdeal(make_universe(1), {{2}})), input_error);
}

TEST_CASE("pure and pseudomanifold") {
  SimplicialComplex d = from_ideal(example_55_ideal());
  CHECK(is_pure(d));
  CHECK(is_pseudomanifold(d));

  SimplicialComplex simplex = complex_from_facets(3, {0b111});
  CHECK(is_pure(simplex));
  CHECK(is_pseudomanifold(simplex));

  SimplicialComplex mixed = complex_from_facets(3, {0b011, 0b100});
  CHECK_FALSE(is_pure(mixed));
  CHECK_FALSE(is_pseudomanifold(mixed));

  // three triangles around one edge: pure but not a pseudomanifold
  SimplicialComplex fan =
      complex_from_facets(5, {0b00111, 0b01011, 0b10011});
  CHECK(is_pure(fan));
  CHECK_FALSE(is_pseudomanifold(fan));
}

TEST_CASE("interior census of the Example 5.5 complex") {
  SimplicialComplex d = from_ideal(example_55_ideal());
  FaceCensus census = interior_census(d);
  CHECK(census.interior_by_codim ==
        std::map<int, long>{{0, 2}, {1, 1}});
  CHECK_FALSE(census.boundary_empty);
  CHECK(census.reduced_euler == 0);  // ball
  // f-vector sanity: 2 facets of size 8 sharing a 7-face
  CHECK(census.f_vector[8] == 2);
  CHECK(census.f_vector[7] == 15);
  // nonnegative h-vector (ball/sphere evidence)
  for (long h : census.h_vector) CHECK(h >= 0);
}

TEST_CASE("interior census conventions") {
  // boundary of a triangle: everything interior including the empty face
  SimplicialComplex tri = complex_from_facets(3, {0b011, 0b101, 0b110});
  FaceCensus census = interior_census(tri);
  CHECK(census.boundary_empty);
  CHECK(census.interior_by_codim == std::map<int, long>{{0, 3}, {1, 3}, {2, 1}});
  CHECK(census.boundary_face_count == 0);
  CHECK((census.reduced_euler == 1 || census.reduced_euler == -1));

  // a single edge: only the edge itself is interior
  SimplicialComplex edge = complex_from_facets(2, {0b11});
  FaceCensus ec = interior_census(edge);
  CHECK(ec.interior_by_codim == std::map<int, long>{{0, 1}});
  CHECK(ec.boundary_face_count == 3);  // two vertices and the empty face
  CHECK(ec.reduced_euler == 0);

  // a point: empty face is boundary
  SimplicialComplex pt = complex_from_facets(1, {0b1});
  FaceCensus pc = interior_census(pt);
  CHECK(pc.interior_by_codim == std::map<int, long>{{0, 1}});
  CHECK(pc.boundary_face_count == 1);
}

TEST_CASE("g_from_interior") {
  SimplicialComplex d = from_ideal(example_55_ideal());
  UniPoly g = g_from_interior(d, 7);
  CHECK(g == UniPoly::one_minus_t_pow(7) * BigInt(2) - UniPoly::one_minus_t_pow(8));

  SimplicialComplex pt = complex_from_facets(1, {0b1});
  CHECK(g_from_interior(pt, 5) == UniPoly::one_minus_t_pow(5));
}

TEST_CASE("vertex decomposability") {
  SimplicialComplex simplex = complex_from_facets(4, {0b1111});
  CHECK(is_vertex_decomposable(simplex) == VertexDecomposable::Yes);

  SimplicialComplex d = from_ideal(example_55_ideal());
  CHECK(is_vertex_decomposable(d) == VertexDecomposable::Yes);

  SimplicialComplex two_edges = complex_from_facets(4, {0b0011, 0b1100});
  CHECK(is_vertex_decomposable(two_edges) == VertexDecomposable::No);

  SimplicialComplex tri = complex_from_facets(3, {0b011, 0b101, 0b110});
  CHECK(is_vertex_decomposable(tri) == VertexDecomposable::Yes);

  // tiny budget yields Indeterminate, never a wrong verdict
  CHECK(is_vertex_decomposable(d, 2) == VertexDecomposable::Indeterminate);
}

TEST_CASE("census requires purity") {
  SimplicialComplex mixed = complex_from_facets(3, {0b011, 0b100});
  CHECK_THROWS_AS(interior_census(mixed), input_error);
}

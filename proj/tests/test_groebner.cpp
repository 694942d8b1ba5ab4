#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "klmult/covex.hpp"
#include "klmult/errors.hpp"
#include "klmult/groebner.hpp"

using namespace klmult;

namespace {

MonomialIdeal ideal_of(const std::vector<Polynomial>& gens, const TermOrder& ord) {
  return initial_ideal(buchberger(gens, ord).basis, ord);
}

std::set<std::string> generator_strings(const MonomialIdeal& I) {
  std::set<std::string> out;
  for (const auto& g : I.generators()) {
    std::string s;
    for (size_t k = 0; k < g.size(); ++k)
      for (int e = 0; e < g[k]; ++e)
        s += "z" + std::to_string(I.universe()[k].i) + std::to_string(I.universe()[k].j) +
             ".";
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("single polynomial is its own reduced basis") {
  Permutation v = Permutation::parse("5123746");
  TermOrder ord = covex_order(v, Permutation::parse("7531462"));
  Polynomial m = minor_determinant(build_zv(v), {1, 2}, {1, 2}, ord);
  auto res = buchberger({m}, ord);
  CHECK(res.input_was_groebner);
  REQUIRE(res.basis.size() == 1);
  CHECK(res.basis[0].lead().coef == 1);  // monic
  CHECK(res.basis[0].lead().mono == m.lead().mono);
  CHECK(is_groebner({m}, ord));
}

TEST_CASE("running example: essential minors are a Groebner basis (Thm 4.1)") {
  Permutation v = Permutation::parse("5123746");
  Permutation w = Permutation::parse("7531462");
  TermOrder ord = covex_order(v, w);
  auto gens = kl_generators(v, w, ord);
  CHECK(is_groebner(gens, ord));

  auto res = buchberger(gens, ord);
  CHECK(res.input_was_groebner);
  MonomialIdeal init = initial_ideal(res.basis, ord);
  // Example 5.5: <z12, z21, z22, z23, z24, z42, z13 z44>
  CHECK(generator_strings(init) ==
        std::set<std::string>{"z12.", "z21.", "z22.", "z23.", "z24.", "z42.",
                              "z13.z44."});
}

TEST_CASE("v = w gives the maximal monomial ideal") {
  for (const char* wtext : {"4231", "321", "53241"}) {
    Permutation w = Permutation::parse(wtext);
    TermOrder ord = covex_order(w, w);
    auto gens = kl_generators(w, w, ord);
    auto res = buchberger(gens, ord);
    MonomialIdeal init = initial_ideal(res.basis, ord);
    CHECK(init.generators().size() == static_cast<size_t>(ord.nvars()));
    for (const auto& g : init.generators()) {
      int total = 0;
      for (int e : g) total += e;
      CHECK(total == 1);  // every variable appears as a lowest-degree form
    }
  }
}

TEST_CASE("Example 8.3: displayed generators are not a Groebner basis") {
  Permutation v = Permutation::parse("23451");
  Permutation w = Permutation::parse("45231");

  for (Reading r : {Reading::SeNw, Reading::SwNe}) {
    TermOrder ord = composite_reading_order(v, r);
    auto gens = kl_generators(v, w, ord);
    REQUIRE(gens.size() == 2);
    CHECK_FALSE(is_groebner(gens, ord));

    auto res = buchberger(gens, ord);
    CHECK_FALSE(res.input_was_groebner);
    MonomialIdeal init = initial_ideal(res.basis, ord);
    // strictly contains <z11>
    std::vector<int> z11(ord.nvars(), 0);
    z11[ord.var_index({1, 1})] = 1;
    CHECK(init.contains_monomial(z11));
    CHECK(init.generators().size() > 1);
  }
}

TEST_CASE("empty and trivial inputs") {
  TermOrder ord = TermOrder::pure_lex(reading_order(generic_matrix(2), Reading::SwNe));
  auto res = buchberger({}, ord);
  CHECK(res.basis.empty());
  CHECK(res.input_was_groebner);
  CHECK(is_groebner({}, ord));
  MonomialIdeal init = initial_ideal(res.basis, ord);
  CHECK(init.is_zero_ideal());
}

TEST_CASE("reduction produces a normal form") {
  // generic 3x3 matrix, two 2x2 minors sharing a column
  SpecializedMatrix z = generic_matrix(3);
  TermOrder ord = TermOrder::pure_lex(reading_order(z, Reading::SwNe));
  Polynomial a = minor_determinant(z, {1, 2}, {1, 2}, ord);
  Polynomial b = minor_determinant(z, {1, 2}, {1, 3}, ord);
  auto res = buchberger({a, b}, ord);
  for (const auto& g : res.basis) {
    // fully reduced: no term of g is divisible by another lead
    for (const auto& h : res.basis) {
      if (h.lead().mono == g.lead().mono) continue;
      for (const auto& t : g.terms()) CHECK_FALSE(ord.divides(h.lead().mono, t.mono));
    }
  }
  // the Groebner property of the output
  CHECK(is_groebner(res.basis, ord));
}

TEST_CASE("covexillary sweep n <= 4: Groebner + squarefree under the covex order") {
  for (int n = 2; n <= 4; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      if (!is_covexillary(w)) continue;
      for (const Permutation& v : bruhat_lower_interval(w)) {
        TermOrder ord = covex_order(v, w);
        auto gens = kl_generators(v, w, ord);
        auto res = buchberger(gens, ord);
        CHECK(res.input_was_groebner);
        CHECK(is_squarefree(initial_ideal(res.basis, ord)));
      }
    }
  }
}

TEST_CASE("degree and standard Hilbert series agree across orders on "
          "standard-homogeneous ideals") {
  // Schubert determinantal ideals are standard homogeneous, so every term
  // order yields the same K-polynomial data.
  for (const char* wtext : {"2143", "3142", "4231", "3412"}) {
    Permutation w = Permutation::parse(wtext);
    SpecializedMatrix z = generic_matrix(w.n());
    TermOrder sw = TermOrder::pure_lex(reading_order(z, Reading::SwNe));
    TermOrder se = TermOrder::pure_lex(reading_order(z, Reading::SeNw));
    auto gsw = schubert_determinantal_generators(w, sw);
    auto gse = schubert_determinantal_generators(w, se);
    for (const auto& g : gsw) CHECK(g.standard_homogeneous());
    MonomialIdeal isw = ideal_of(gsw, sw);
    MonomialIdeal ise = ideal_of(gse, se);
    CHECK(k_polynomial(isw) == k_polynomial(ise));
    CHECK(degree(isw) == degree(ise));
    CHECK(dimension(isw) == dimension(ise));
  }
}

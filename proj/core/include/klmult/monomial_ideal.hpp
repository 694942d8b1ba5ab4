#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klmult/bigint.hpp"
#include "klmult/permutation.hpp"
#include "klmult/unipoly.hpp"

namespace klmult {

// Variable subset generating a coordinate-subspace prime.
struct PrimeComponent {
  std::vector<int> variables;  // indices into the ideal's universe, sorted
  friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

// Monomial ideal over a fixed ordered universe of grid variables.
// Generators are kept divisibility-minimal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // exponent vectors over the universe; minimalized on construction
  MonomialIdeal(std::vector<Box> universe, std::vector<std::vector<int>> gens);

  const std::vector<Box>& universe() const { return universe_; }
  int nvars() const { return static_cast<int>(universe_.size()); }
  const std::vector<std::vector<int>>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool contains_monomial(const std::vector<int>& exps) const;
  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Box> universe_;
  std::vector<std::vector<int>> gens_;
};

bool is_squarefree(const MonomialIdeal& I);
MonomialIdeal radical(const MonomialIdeal& I);

// Minimal primes of a squarefree monomial ideal (minimal vertex covers of
// the generator supports), sorted.
std::vector<PrimeComponent> prime_decomposition(const MonomialIdeal& I);

// Numerator K(t) with Hilb(S/I, t) = K(t) / (1-t)^nvars under the standard
// grading, by the pivot recursion K(S/I) = K(S/(I+<x>)) + t K(S/(I:x)).
UniPoly k_polynomial(const MonomialIdeal& I);

// K = (1-t)^c Q with Q(1) != 0: dimension = nvars - c, degree = Q(1).
int dimension(const MonomialIdeal& I);
BigInt degree(const MonomialIdeal& I);

bool is_equidimensional(const MonomialIdeal& I);

}  // namespace klmult

#pragma once

#include <vector>

#include "klmult/monomial_ideal.hpp"
#include "klmult/polynomial.hpp"

namespace klmult {

// Full normal form of f modulo G.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const TermOrder& ord);

struct BuchbergerResult {
  std::vector<Polynomial> basis;   // reduced: monic, interreduced, sorted by lead
  bool input_was_groebner = true;  // no S-pair survived reduction
};

// Buchberger with the normal selection strategy (smallest lcm first) and the
// product and chain criteria.
BuchbergerResult buchberger(std::vector<Polynomial> gens, const TermOrder& ord);

// All S-polynomials of gens reduce to zero modulo gens.
bool is_groebner(const std::vector<Polynomial>& gens, const TermOrder& ord);

// Lead-term ideal of a Groebner basis.
MonomialIdeal initial_ideal(const std::vector<Polynomial>& gb, const TermOrder& ord);

}  // namespace klmult

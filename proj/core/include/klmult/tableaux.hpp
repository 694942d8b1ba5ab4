#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klmult/bigint.hpp"
#include "klmult/permutation.hpp"
#include "klmult/unipoly.hpp"

namespace klmult {

// Semistandard filling of lambda, displayed with row 1 on top: rows weakly
// increase left to right, columns strictly increase downward. Row r entries
// are bounded by the attached flag.
struct FlaggedTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[r-1][c-1]
  int at(int r, int c) const { return rows[r - 1][c - 1]; }
  std::string str() const;
  friend auto operator<=>(const FlaggedTableau&, const FlaggedTableau&) = default;
};

// Non-empty set per box; elements weakly smaller than everything to the
// right, strictly smaller than everything below.
struct SetValuedTableau {
  Partition shape;
  std::vector<std::vector<std::vector<int>>> sets;  // sorted ascending
  long total_entries() const;
  std::string str() const;
  friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;
};

// +'s inside the French-notation region, reachable from the initial
// lambda-filling by the 2x2 southwest-to-northeast move.
struct PipeDream {
  Partition region;
  std::vector<Box> plusses;  // sorted
  std::string str() const;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

std::vector<FlaggedTableau> enumerate_flagged_ssyt(const Partition& lambda,
                                                   const FlagVector& b);
BigInt count_flagged_ssyt(const Partition& lambda, const FlagVector& b);

// det( C(b_i + lambda_i - i + j - 1, lambda_i - i + j) ), exact.
BigInt det_multiplicity(const Partition& lambda, const FlagVector& b);

std::vector<SetValuedTableau> enumerate_set_valued(const Partition& lambda,
                                                   const FlagVector& b, long k);

// Sum_{k >= |lambda|} (-1)^(k-|lambda|) (1-t)^k #SetSSYT(lambda,b,k).
// The sum is finite: no box can hold more than its row bound.
UniPoly g_poly(const Partition& lambda, const FlagVector& b);

std::vector<PipeDream> pipe_dreams(const Partition& region, const Partition& lambda);

FlaggedTableau pipedream_to_tableau(const PipeDream& p, const Partition& lambda);
PipeDream tableau_to_pipedream(const FlaggedTableau& t, const Partition& region);

// Flagged tableau count for (lambda(w), b(Theta_{v,w})); cross-checked
// against the binomial determinant on every call.
BigInt multiplicity_covexillary(const Permutation& v, const Permutation& w);

struct HilbertSeries {
  UniPoly numerator;            // G_lambda(t)
  int tangent_cone_exponent;    // l(w0 v)
  int local_ring_exponent;      // C(n,2)
};
HilbertSeries hilbert_series_covexillary(const Permutation& v, const Permutation& w);

}  // namespace klmult

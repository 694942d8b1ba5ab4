#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klmult/bigint.hpp"
#include "klmult/covex.hpp"
#include "klmult/groebner.hpp"
#include "klmult/permutation.hpp"
#include "klmult/simplicial.hpp"
#include "klmult/tableaux.hpp"
#include "klmult/unipoly.hpp"

namespace klmult {

enum class Shuffle { Covex, SeNw, SwNe };
std::string shuffle_name(Shuffle s);
Shuffle parse_shuffle(const std::string& s);

// Everything the tool knows about one pair (v, w). The covexillary path
// fills all four multiplicity routes; the general path carries the Groebner
// degree only, plus the degeneration findings for the selected shuffling.
struct PairReport {
  std::string v, w;
  bool covexillary = false;
  std::string shuffle;

  std::optional<std::string> theta;
  std::optional<std::vector<int>> lambda;
  std::optional<std::vector<int>> flag_B;
  std::optional<std::vector<int>> flag_b;
  std::optional<std::string> rho, chi;

  std::optional<BigInt> mult_tableau, mult_det, mult_facets, mult_degree;
  std::optional<UniPoly> g_numerator;
  int tangent_cone_exponent = 0;  // l(w0 v)
  int local_ring_exponent = 0;    // C(n,2)

  std::map<std::string, bool> checks;
  std::map<std::string, double> timings_ms;

  bool mults_agree() const;
  bool theorem_level_ok() const;  // the checks that Thms 4.1/5.2/6.x pin
  friend bool operator==(const PairReport&, const PairReport&);
};

// Runs the pair pipeline. Throws input_error for bad domains (v not <= w);
// never throws on check failures - they land in `checks`.
PairReport compute_pair_report(const Permutation& v, const Permutation& w,
                               Shuffle shuffle);

std::string report_to_json(const PairReport& r);
PairReport report_from_json(const std::string& text);

struct SweepOptions {
  int n = 3;
  Shuffle shuffle = Shuffle::Covex;
  bool covexillary_only = false;
  std::string pairs_filter;  // "W:V" with * wildcards; empty = all
  int workers = 1;
  double budget_seconds = 0;  // 0 = unlimited
};

struct SweepResult {
  std::vector<PairReport> reports;  // sorted by (w, v)
  long pairs = 0;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> failures;
  bool theorem_failure = false;
  bool budget_exceeded = false;
};

SweepResult run_sweep(const SweepOptions& opt);

}  // namespace klmult

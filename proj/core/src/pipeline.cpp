#include "klmult/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "klmult/errors.hpp"

namespace klmult {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string shuffle_name(Shuffle s) {
  switch (s) {
    case Shuffle::Covex: return "covex";
    case Shuffle::SeNw: return "se-nw";
    case Shuffle::SwNe: return "sw-ne";
  }
  return "?";
}

Shuffle parse_shuffle(const std::string& s) {
  if (s == "covex") return Shuffle::Covex;
  if (s == "se-nw") return Shuffle::SeNw;
  if (s == "sw-ne") return Shuffle::SwNe;
  throw input_error("unknown shuffle '" + s + "' (covex, se-nw, sw-ne)");
}

bool PairReport::mults_agree() const {
  std::vector<BigInt> present;
  for (const auto& m : {mult_tableau, mult_det, mult_facets, mult_degree})
    if (m) present.push_back(*m);
  for (const auto& m : present)
    if (m != present.front()) return false;
  return true;
}

bool PairReport::theorem_level_ok() const {
  if (shuffle != "covex") return true;  // general shufflings produce findings
  static const char* required[] = {
      "groebner_essential_minors", "squarefree",     "equidimensional",
      "decomposition_pipedreams",  "mult_agree",     "hilbert_routes_match",
      "dim_match",                 "census_match",   "pure",
      "pseudomanifold"};
  for (const char* name : required) {
    auto it = checks.find(name);
    if (it == checks.end() || !it->second) return false;
  }
  return true;
}

bool operator==(const PairReport& a, const PairReport& b) {
  return a.v == b.v && a.w == b.w && a.covexillary == b.covexillary &&
         a.shuffle == b.shuffle && a.theta == b.theta && a.lambda == b.lambda &&
         a.flag_B == b.flag_B && a.flag_b == b.flag_b && a.rho == b.rho &&
         a.chi == b.chi && a.mult_tableau == b.mult_tableau &&
         a.mult_det == b.mult_det && a.mult_facets == b.mult_facets &&
         a.mult_degree == b.mult_degree && a.g_numerator == b.g_numerator &&
         a.tangent_cone_exponent == b.tangent_cone_exponent &&
         a.local_ring_exponent == b.local_ring_exponent && a.checks == b.checks &&
         a.timings_ms == b.timings_ms;
}

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<int> partition_vec(const Partition& p) { return p.parts(); }

// Prime components mapped through rho/chi into shuffled-matrix positions.
std::vector<std::vector<Box>> components_as_grids(const std::vector<PrimeComponent>& primes,
                                                  const MonomialIdeal& ideal,
                                                  const Permutation& rho,
                                                  const Permutation& chi) {
  Permutation rho_inv = rho.inverse(), chi_inv = chi.inverse();
  std::vector<std::vector<Box>> out;
  for (const auto& p : primes) {
    std::vector<Box> grid;
    for (int idx : p.variables) {
      Box z = ideal.universe()[idx];
      grid.push_back({rho_inv(z.i), chi_inv(z.j)});
    }
    std::sort(grid.begin(), grid.end());
    out.push_back(std::move(grid));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PairReport compute_pair_report(const Permutation& v, const Permutation& w,
                               Shuffle shuffle) {
  if (v.n() != w.n()) throw input_error("v and w must belong to the same S_n");
  if (!bruhat_leq(v, w))
    throw input_error("e_v not in X_w: v must be <= w in Bruhat order");

  PairReport rep;
  rep.v = v.str();
  rep.w = w.str();
  rep.covexillary = is_covexillary(w);
  if (shuffle == Shuffle::Covex && !rep.covexillary) shuffle = Shuffle::SeNw;
  rep.shuffle = shuffle_name(shuffle);
  const int n = v.n();
  rep.tangent_cone_exponent = length(Permutation::longest(n) * v);
  rep.local_ring_exponent = n * (n - 1) / 2;

  const bool covex_path = (shuffle == Shuffle::Covex);
  Partition lambda;
  FlagVector b;
  Permutation th;
  ShuffleData sd;

  if (rep.covexillary) {
    auto t0 = Clock::now();
    th = theta(v, w);
    lambda = shape_lambda(w);
    b = flag_b(th);
    rep.theta = th.str();
    rep.lambda = partition_vec(lambda);
    rep.flag_B = partition_vec(bounding_B(th));
    rep.flag_b = b.bounds;
    rep.mult_tableau = count_flagged_ssyt(lambda, b);
    rep.mult_det = det_multiplicity(lambda, b);
    rep.g_numerator = g_poly(lambda, b);
    rep.timings_ms["combinatorics"] = ms_since(t0);
  }

  TermOrder ord = covex_path ? covex_order(v, w)
                             : composite_reading_order(
                                   v, shuffle == Shuffle::SwNe ? Reading::SwNe
                                                               : Reading::SeNw);
  if (covex_path) {
    sd = shuffle_data(v, w);
    rep.rho = sd.rho.str();
    rep.chi = sd.chi.str();
  }

  auto t0 = Clock::now();
  std::vector<Polynomial> gens = kl_generators(v, w, ord);
  BuchbergerResult gb = buchberger(gens, ord);
  rep.checks["groebner_essential_minors"] = gb.input_was_groebner;
  MonomialIdeal init = initial_ideal(gb.basis, ord);
  rep.timings_ms["groebner"] = ms_since(t0);

  t0 = Clock::now();
  rep.checks["squarefree"] = is_squarefree(init);
  UniPoly K = k_polynomial(init);
  auto [codim, Q] = K.strip_one_minus_t();
  rep.mult_degree = Q.eval_one();
  MonomialIdeal rad = radical(init);
  SimplicialComplex delta = from_ideal(rad);
  rep.checks["equidimensional"] = is_equidimensional(rad);
  rep.checks["pure"] = is_pure(delta);
  rep.checks["pseudomanifold"] = is_pseudomanifold(delta);
  if (rep.checks["squarefree"] && rep.checks["equidimensional"])
    rep.mult_facets = BigInt(delta.facets.size());
  rep.timings_ms["initial_scheme"] = ms_since(t0);

  if (covex_path) {
    t0 = Clock::now();
    // Theorem 5.2 checks: the prime components, read through the shuffled
    // matrix, are exactly the pipe dreams.
    std::vector<std::vector<Box>> comp_grids =
        components_as_grids(prime_decomposition(rad), rad, sd.rho, sd.chi);
    std::vector<std::vector<Box>> dream_grids;
    for (const PipeDream& p : pipe_dreams(bounding_B(th), lambda))
      dream_grids.push_back(p.plusses);
    std::sort(dream_grids.begin(), dream_grids.end());
    rep.checks["decomposition_pipedreams"] = comp_grids == dream_grids;

    // Hilbert numerator: set-valued census vs interior-face census vs the
    // K-polynomial of the initial ideal.
    const int shift = length(Permutation::longest(n) * w);
    bool routes = false, census_ok = false, dim_ok = false;
    if (rep.checks["pure"]) {
      UniPoly g_interior = g_from_interior(delta, shift);
      routes = (K == *rep.g_numerator) && (g_interior == K);
      FaceCensus census = interior_census(delta);
      census_ok = true;
      long kmax = 0;
      for (int r = 1; r <= lambda.rows(); ++r)
        kmax += static_cast<long>(lambda[r]) * b[r];
      for (long k = lambda.size(); k <= kmax + 1; ++k) {
        long expected = static_cast<long>(enumerate_set_valued(lambda, b, k).size());
        long got = 0;
        auto it = census.interior_by_codim.find(static_cast<int>(k - lambda.size()));
        if (it != census.interior_by_codim.end()) got = it->second;
        if (expected != got) census_ok = false;
      }
      dim_ok = delta.dim() == length(w) - length(v) - 1;
    }
    rep.checks["hilbert_routes_match"] = routes;
    rep.checks["census_match"] = census_ok;
    rep.checks["dim_match"] = dim_ok;
    rep.timings_ms["cross_checks"] = ms_since(t0);
  }

  rep.checks["mult_agree"] = rep.mults_agree();
  return rep;
}

namespace {

json bigint_to_json(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      x < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw input_error("integer too large for the JSON schema");
  return json(x.convert_to<std::int64_t>());
}

json unipoly_to_json(const UniPoly& p) {
  json arr = json::array();
  for (const BigInt& c : p.coeffs()) arr.push_back(bigint_to_json(c));
  return arr;
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(BigInt(x.get<std::int64_t>()));
  return UniPoly(std::move(c));
}

}  // namespace

std::string report_to_json(const PairReport& r) {
  json j;
  j["schema"] = 1;
  j["v"] = r.v;
  j["w"] = r.w;
  j["covexillary"] = r.covexillary;
  j["shuffle"] = r.shuffle;
  if (r.theta) j["theta"] = *r.theta;
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.flag_B) j["flag_B"] = *r.flag_B;
  if (r.flag_b) j["flag_b"] = *r.flag_b;
  if (r.rho) j["rho"] = *r.rho;
  if (r.chi) j["chi"] = *r.chi;
  if (r.mult_tableau) j["mult_tableau"] = bigint_to_json(*r.mult_tableau);
  if (r.mult_det) j["mult_det"] = bigint_to_json(*r.mult_det);
  if (r.mult_facets) j["mult_facets"] = bigint_to_json(*r.mult_facets);
  if (r.mult_degree) j["mult_degree"] = bigint_to_json(*r.mult_degree);
  if (r.g_numerator) j["g_numerator"] = unipoly_to_json(*r.g_numerator);
  j["tangent_cone_exponent"] = r.tangent_cone_exponent;
  j["local_ring_exponent"] = r.local_ring_exponent;
  j["checks"] = r.checks;
  j["timings_ms"] = r.timings_ms;
  return j.dump();
}

PairReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw input_error("unsupported report schema");
  PairReport r;
  r.v = j["v"].get<std::string>();
  r.w = j["w"].get<std::string>();
  r.covexillary = j["covexillary"].get<bool>();
  r.shuffle = j["shuffle"].get<std::string>();
  if (j.contains("theta")) r.theta = j["theta"].get<std::string>();
  if (j.contains("lambda")) r.lambda = j["lambda"].get<std::vector<int>>();
  if (j.contains("flag_B")) r.flag_B = j["flag_B"].get<std::vector<int>>();
  if (j.contains("flag_b")) r.flag_b = j["flag_b"].get<std::vector<int>>();
  if (j.contains("rho")) r.rho = j["rho"].get<std::string>();
  if (j.contains("chi")) r.chi = j["chi"].get<std::string>();
  if (j.contains("mult_tableau")) r.mult_tableau = BigInt(j["mult_tableau"].get<std::int64_t>());
  if (j.contains("mult_det")) r.mult_det = BigInt(j["mult_det"].get<std::int64_t>());
  if (j.contains("mult_facets")) r.mult_facets = BigInt(j["mult_facets"].get<std::int64_t>());
  if (j.contains("mult_degree")) r.mult_degree = BigInt(j["mult_degree"].get<std::int64_t>());
  if (j.contains("g_numerator")) r.g_numerator = unipoly_from_json(j["g_numerator"]);
  r.tangent_cone_exponent = j["tangent_cone_exponent"].get<int>();
  r.local_ring_exponent = j["local_ring_exponent"].get<int>();
  r.checks = j["checks"].get<std::map<std::string, bool>>();
  r.timings_ms = j["timings_ms"].get<std::map<std::string, double>>();
  return r;
}

namespace {

bool pattern_matches(const std::string& pattern, const std::string& value) {
  return pattern == "*" || pattern == value;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& opt) {
  std::string wpat = "*", vpat = "*";
  if (!opt.pairs_filter.empty()) {
    auto colon = opt.pairs_filter.find(':');
    if (colon == std::string::npos)
      throw input_error("--pairs expects \"W:V\" with * wildcards");
    wpat = opt.pairs_filter.substr(0, colon);
    vpat = opt.pairs_filter.substr(colon + 1);
  }

  std::vector<std::pair<Permutation, Permutation>> pairs;  // (w, v)
  for (const Permutation& w : all_permutations(opt.n)) {
    bool covex = is_covexillary(w);
    if ((opt.covexillary_only || opt.shuffle == Shuffle::Covex) && !covex) continue;
    if (!pattern_matches(wpat, w.str())) continue;
    for (const Permutation& v : bruhat_lower_interval(w)) {
      if (!pattern_matches(vpat, v.str())) continue;
      pairs.push_back({w, v});
    }
  }

  SweepResult result;
  result.pairs = static_cast<long>(pairs.size());
  std::vector<std::optional<PairReport>> slots(pairs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  Clock::time_point start = Clock::now();

  auto worker = [&]() {
    while (!stop.load()) {
      size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      if (opt.budget_seconds > 0 &&
          std::chrono::duration<double>(Clock::now() - start).count() >
              opt.budget_seconds) {
        stop.store(true);
        return;
      }
      slots[k] = compute_pair_report(pairs[k].second, pairs[k].first, opt.shuffle);
    }
  };

  int nworkers = std::max(1, opt.workers);
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < nworkers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  result.budget_exceeded = stop.load();

  for (auto& s : slots)
    if (s) result.reports.push_back(std::move(*s));
  std::sort(result.reports.begin(), result.reports.end(),
            [](const PairReport& a, const PairReport& b) {
              return std::tie(a.w, a.v) < std::tie(b.w, b.v);
            });

  for (const PairReport& r : result.reports) {
    for (const auto& [name, ok] : r.checks)
      if (!ok) result.failures[name].push_back({r.w, r.v});
    if (!r.theorem_level_ok()) result.theorem_failure = true;
  }
  return result;
}

}  // namespace klmult

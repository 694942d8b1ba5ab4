// klmult: Hilbert-Samuel multiplicities and Hilbert series of Schubert
// varieties at torus fixed points, by Groebner degeneration of
// Kazhdan-Lusztig ideals and by the covexillary combinatorial rules.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "klmult/covex.hpp"
#include "klmult/errors.hpp"
#include "klmult/groebner.hpp"
#include "klmult/pipeline.hpp"
#include "klmult/tableaux.hpp"

using namespace klmult;
using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

struct PairArgs {
  std::string v, w;
  std::string shuffle = "covex";
  bool as_json = false;
};

void add_pair_options(CLI::App* cmd, PairArgs& args, bool with_shuffle = true) {
  cmd->add_option("--v", args.v, "fixed point e_v, one-line notation")->required();
  cmd->add_option("--w", args.w, "Schubert variety X_w, one-line notation")->required();
  if (with_shuffle)
    cmd->add_option("--shuffle", args.shuffle,
                    "variable shuffling: covex, se-nw or sw-ne");
  cmd->add_flag("--json", args.as_json, "emit JSON");
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s = "(";
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(xs[k]);
  }
  return s + ")";
}

void print_report_human(const PairReport& r) {
  std::cout << "pair          v = " << r.v << "   w = " << r.w << "\n";
  std::cout << "covexillary   " << (r.covexillary ? "yes" : "no") << "\n";
  std::cout << "shuffle       " << r.shuffle << "\n";
  if (r.theta) std::cout << "theta         " << *r.theta << "\n";
  if (r.lambda) std::cout << "lambda        " << join_ints(*r.lambda) << "\n";
  if (r.flag_B) std::cout << "B(theta)      " << join_ints(*r.flag_B) << "\n";
  if (r.flag_b) std::cout << "b(theta)      " << join_ints(*r.flag_b) << "\n";
  if (r.rho) std::cout << "rho           " << *r.rho << "\n";
  if (r.chi) std::cout << "chi           " << *r.chi << "\n";
  auto show = [](const char* name, const std::optional<BigInt>& m) {
    if (m) std::cout << name << m->str() << "\n";
  };
  show("mult_tableau  ", r.mult_tableau);
  show("mult_det      ", r.mult_det);
  show("mult_facets   ", r.mult_facets);
  show("mult_degree   ", r.mult_degree);
  if (r.g_numerator)
    std::cout << "G(t)          " << r.g_numerator->str_one_minus_t_basis() << "\n";
  std::cout << "checks        ";
  bool first = true;
  for (const auto& [name, ok] : r.checks) {
    if (!first) std::cout << ", ";
    std::cout << name << "=" << (ok ? "ok" : "FAIL");
    first = false;
  }
  std::cout << "\n";
}

int cmd_mult(const PairArgs& args) {
  Permutation v = Permutation::parse(args.v);
  Permutation w = Permutation::parse(args.w);
  PairReport rep = compute_pair_report(v, w, parse_shuffle(args.shuffle));
  if (args.as_json)
    std::cout << report_to_json(rep) << "\n";
  else
    print_report_human(rep);
  if (!rep.mults_agree()) {
    std::cerr << "cross-method disagreement: the computed multiplicities differ\n";
    return kExitCrossCheck;
  }
  return 0;
}

int cmd_hilbert(const PairArgs& args) {
  Permutation v = Permutation::parse(args.v);
  Permutation w = Permutation::parse(args.w);
  if (!is_covexillary(w))
    throw input_error("hilbert requires covexillary w (Theorem 6.5 path)");
  if (!bruhat_leq(v, w)) throw input_error("v must be <= w in Bruhat order");
  HilbertSeries h = hilbert_series_covexillary(v, w);
  const int terms = 12;
  auto cone = h.numerator.series_coeffs(h.tangent_cone_exponent, terms);
  auto local = h.numerator.series_coeffs(h.local_ring_exponent, terms);
  if (args.as_json) {
    json j;
    j["schema"] = 1;
    j["v"] = v.str();
    j["w"] = w.str();
    json num = json::array();
    for (const auto& c : h.numerator.coeffs()) num.push_back(c.convert_to<std::int64_t>());
    j["numerator"] = num;
    j["tangent_cone_exponent"] = h.tangent_cone_exponent;
    j["local_ring_exponent"] = h.local_ring_exponent;
    json jc = json::array(), jl = json::array();
    for (const auto& c : cone) jc.push_back(c.convert_to<std::int64_t>());
    for (const auto& c : local) jl.push_back(c.convert_to<std::int64_t>());
    j["tangent_cone_series"] = jc;
    j["local_ring_series"] = jl;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "G(t)                 " << h.numerator.str_one_minus_t_basis()
              << "\n";
    std::cout << "tangent cone         G(t)/(1-t)^" << h.tangent_cone_exponent
              << "\n";
    std::cout << "local ring           G(t)/(1-t)^" << h.local_ring_exponent << "\n";
    auto show = [&](const char* name, const std::vector<BigInt>& cs) {
      std::cout << name;
      for (const auto& c : cs) std::cout << " " << c.str();
      std::cout << "\n";
    };
    show("tangent cone series ", cone);
    show("local ring series   ", local);
  }
  return 0;
}

int cmd_objects(const std::string& vtext, const std::string& wtext,
                const std::string& kind, int entries) {
  Permutation v = Permutation::parse(vtext);
  Permutation w = Permutation::parse(wtext);
  if (kind == "diagram") {
    std::cout << diagram_picture(w);
    return 0;
  }
  if (!is_covexillary(w)) throw input_error("objects: w must be covexillary");
  if (!bruhat_leq(v, w)) throw input_error("v must be <= w in Bruhat order");
  Permutation th = theta(v, w);
  if (kind == "theta") {
    std::cout << th.str() << "\n";
    return 0;
  }
  Partition lambda = shape_lambda(w);
  FlagVector b = flag_b(th);
  if (kind == "tableaux") {
    for (const auto& t : enumerate_flagged_ssyt(lambda, b)) std::cout << t.str() << "\n";
  } else if (kind == "pipedreams") {
    for (const auto& p : pipe_dreams(bounding_B(th), lambda))
      std::cout << p.str() << "\n";
  } else if (kind == "setvalued") {
    if (entries < 0) throw input_error("--entries K is required for setvalued");
    for (const auto& t : enumerate_set_valued(lambda, b, entries))
      std::cout << t.str() << "\n";
  } else {
    throw input_error("unknown kind '" + kind +
                      "' (tableaux, pipedreams, setvalued, theta, diagram)");
  }
  return 0;
}

int cmd_groebner(const PairArgs& args) {
  Permutation v = Permutation::parse(args.v);
  Permutation w = Permutation::parse(args.w);
  Shuffle sh = parse_shuffle(args.shuffle);
  if (sh == Shuffle::Covex && !is_covexillary(w)) sh = Shuffle::SeNw;
  TermOrder ord =
      sh == Shuffle::Covex
          ? covex_order(v, w)
          : composite_reading_order(v, sh == Shuffle::SwNe ? Reading::SwNe
                                                           : Reading::SeNw);
  auto gens = kl_generators(v, w, ord);
  auto res = buchberger(gens, ord);
  MonomialIdeal init = initial_ideal(res.basis, ord);

  std::cout << "pi:";
  for (Box b : ord.priority()) std::cout << " z[" << b.i << "][" << b.j << "]";
  std::cout << "\n";
  std::cout << "generators (" << gens.size() << "), groebner_basis_already="
            << (res.input_was_groebner ? "yes" : "no") << "\n";
  std::cout << "reduced basis (" << res.basis.size() << "):\n";
  for (const auto& g : res.basis) std::cout << "  " << g.str(ord) << "\n";
  std::cout << "initial ideal " << init.str() << "\n";
  if (is_squarefree(init)) {
    std::cout << "decomposition:\n";
    for (const auto& p : prime_decomposition(init)) {
      std::cout << "  <";
      for (size_t k = 0; k < p.variables.size(); ++k) {
        Box bx = init.universe()[p.variables[k]];
        std::cout << (k ? ", " : "") << "z[" << bx.i << "][" << bx.j << "]";
      }
      std::cout << ">\n";
    }
  } else {
    std::cout << "initial ideal is not squarefree; radical "
              << radical(init).str() << "\n";
  }
  return 0;
}

int cmd_sweep(SweepOptions opt, bool as_json) {
  if (const char* env = std::getenv("KLMULT_WORKERS")) {
    try {
      opt.workers = std::stoi(env);
    } catch (const std::exception&) {
      throw input_error("KLMULT_WORKERS is not an integer");
    }
  }
  SweepResult result = run_sweep(opt);
  if (result.budget_exceeded) {
    std::cerr << "sweep aborted: --budget-seconds exceeded\n";
    return kExitUsage;
  }
  if (as_json) {
    for (const auto& r : result.reports) std::cout << report_to_json(r) << "\n";
  } else {
    std::cout << "n=" << opt.n << " shuffle=" << shuffle_name(opt.shuffle)
              << " pairs=" << result.pairs << "\n";
    if (result.failures.empty()) {
      std::cout << "all checks passed\n";
    } else {
      for (const auto& [name, pairs] : result.failures) {
        std::cout << name << ": " << pairs.size() << " failure(s)";
        for (const auto& [w, v] : pairs) std::cout << "  (w=" << w << ",v=" << v << ")";
        std::cout << "\n";
      }
    }
  }
  if (result.theorem_failure) {
    std::cerr << "theorem-level check failed\n";
    return kExitCrossCheck;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicities and Hilbert series of Schubert varieties at "
               "torus fixed points"};
  app.require_subcommand(1);

  PairArgs mult_args, hilbert_args, groebner_args;
  auto* mult = app.add_subcommand("mult", "multiplicity by all applicable methods");
  add_pair_options(mult, mult_args);
  auto* hilbert =
      app.add_subcommand("hilbert", "Hilbert series of the local ring at e_v");
  add_pair_options(hilbert, hilbert_args, false);
  auto* groebner = app.add_subcommand(
      "groebner", "reduced Groebner basis, initial ideal and decomposition");
  add_pair_options(groebner, groebner_args);

  std::string obj_v, obj_w, obj_kind;
  int obj_entries = -1;
  auto* objects = app.add_subcommand("objects", "print combinatorial objects");
  objects->add_option("--v", obj_v)->required();
  objects->add_option("--w", obj_w)->required();
  objects->add_option("--kind", obj_kind,
                      "tableaux | pipedreams | setvalued | theta | diagram")
      ->required();
  objects->add_option("--entries", obj_entries, "entry count for setvalued");

  SweepOptions sweep_opt;
  bool sweep_json = false;
  std::string sweep_shuffle = "covex";
  auto* sweep = app.add_subcommand("sweep", "exhaustive pair sweep with checks");
  sweep->add_option("--n", sweep_opt.n, "symmetric group size")->required();
  sweep->add_option("--shuffle", sweep_shuffle, "covex, se-nw or sw-ne");
  sweep->add_flag("--covexillary-only", sweep_opt.covexillary_only);
  sweep->add_option("--pairs", sweep_opt.pairs_filter, "\"W:V\" filter, * wildcards");
  sweep->add_option("--workers", sweep_opt.workers, "worker threads");
  sweep->add_option("--budget-seconds", sweep_opt.budget_seconds);
  sweep->add_flag("--json", sweep_json, "one JSON report per line");

  try {
    app.parse(argc, argv);
    if (mult->parsed()) return cmd_mult(mult_args);
    if (hilbert->parsed()) return cmd_hilbert(hilbert_args);
    if (groebner->parsed()) return cmd_groebner(groebner_args);
    if (objects->parsed()) return cmd_objects(obj_v, obj_w, obj_kind, obj_entries);
    if (sweep->parsed()) {
      sweep_opt.shuffle = parse_shuffle(sweep_shuffle);
      return cmd_sweep(sweep_opt, sweep_json);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const crosscheck_error& e) {
    std::cerr << "internal cross-check violation: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return kExitUsage;
}

// locbasis: batch front end. Every command prints one JSON report on stdout.
// Exit status: 0 success, 2 undecided at the window or a failed claim, 1 usage
// or parse error.

#include "locbasis/approx.hpp"
#include "locbasis/errors.hpp"
#include "locbasis/json_io.hpp"
#include "locbasis/oracle.hpp"
#include "locbasis/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

using namespace locbasis;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUndecided = 2;

struct UsageError : Error {
  using Error::Error;
};

// Where the ideal comes from: a file, inline flags, or both (flags win).
struct IdealInput {
  std::string file;
  std::string vars;
  std::string prec;
  std::string order;
  std::vector<std::string> gens;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "ideal file (vars:/prec:/order:/gen: lines)");
    cmd->add_option("--vars", vars, "variable names, separated by spaces or commas");
    cmd->add_option("--prec", prec, "working precision mu");
    cmd->add_option("--order", order, "std, w:a,b,c or split:k=K,l=L");
    cmd->add_option("--gen", gens, "generator expression (repeatable)");
  }

  IdealFile load() const {
    IdealFile f;
    if (!file.empty()) f = load_ideal_file(file);
    if (!vars.empty()) {
      std::string text = "vars: " + vars + "\n";
      std::replace(text.begin(), text.end(), ',', ' ');
      f.names = parse_ideal_file(text + "gen: 0\n").names;
      f.gens.clear();
      f.sources.clear();
    }
    if (!prec.empty()) f.prec = parse_rational(prec);
    if (!order.empty()) f.order = order;
    for (const auto& g : gens) {
      f.sources.push_back(g);
      f.gens.push_back(parse_expression(g, f.names));
    }
    if (f.names.empty()) throw UsageError("no variables: give an ideal file or --vars");
    if (sgn(f.prec) <= 0) throw UsageError("precision must be positive");
    f.form(); // validates the order against the variable count
    return f;
  }
};

IdealExpander expander_of(const IdealFile& f) {
  return [f](const LinearForm& form, const Rational& prec) { return f.expand(form, prec); };
}

Json window(const LinearForm& form, const Rational& mu) { return Json{{"form", form.to_string()}, {"mu", to_json(mu)}}; }

Json series_list(const std::vector<Series>& s, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(series_to_json(x, names));
  return out;
}

Json exponents(const std::vector<Exponent>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

Json basis_json(const CertifiedBasis& b, const std::vector<std::string>& names) {
  Json pairs = Json::array();
  for (const auto& p : b.pairs) {
    Json entry{{"i", p.i}, {"j", p.j}, {"outcome", to_string(p.outcome)}};
    if (!p.remainder.empty()) entry["remainder"] = series_to_json(p.remainder, names);
    pairs.push_back(std::move(entry));
  }
  Json prov = Json::array();
  for (const auto& p : b.provenance) prov.push_back(p.to_string());
  Json out{{"verified", b.verified},
           {"window", window(b.form, b.mu)},
           {"heads", exponents(b.heads())},
           {"generators", series_list(b.gens, names)},
           {"provenance", prov},
           {"pairs", pairs},
           {"dropped_inputs", b.dropped_inputs}};
  if (!b.note.empty()) out["note"] = b.note;
  return out;
}

Json flatness_json(const FlatnessReport& r) {
  return Json{{"verdict", to_string(r.verdict)},
              {"k", r.k},
              {"l0", r.l0},
              {"window", window(r.weighted.form, r.weighted_prec)},
              {"mu", to_json(r.mu)},
              {"evaluated_diagram", to_json(r.evaluated)},
              {"weighted_diagram", to_json(r.weighted)},
              {"product", r.product.product},
              {"base", exponents(r.product.base)},
              {"base_matches_evaluated", r.base_matches_evaluated}};
}

Json dimension_json(const DimensionReport& r) {
  return Json{{"k_best", r.k_best},   {"dim_bound", r.dim_bound}, {"matrix", to_json(r.matrix)},
              {"trial", r.trial},     {"trials_run", r.trials_run}, {"diagram", to_json(r.diagram)}};
}

Json claims_json(const std::vector<Claim>& claims) {
  Json out = Json::array();
  for (const auto& c : claims) out.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

// Seeded delta per generator: small integer coefficients on the monomials
// with mu < L(b) <= mu + max weight, so every term lies strictly above mu.
std::vector<std::string> random_deltas(const IdealFile& f, const Rational& mu, std::uint64_t seed) {
  LinearForm form = f.form();
  std::vector<Exponent> shell;
  for_each_exponent_within(form, mu + form.max_weight(), [&](const Exponent& b) {
    if (form.value(b) > mu) shell.push_back(b);
  });
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.gens.size(); ++i) {
    Series d(form);
    for (const auto& b : shell) d.add_term(b, Rational(coeff(rng)));
    out.push_back(d.to_string(f.names));
  }
  return out;
}

// "i:EXPR" pairs (generator index from 1); missing generators get 0.
std::vector<std::string> explicit_deltas(const IdealFile& f, const std::vector<std::string>& specs) {
  std::vector<std::string> out(f.gens.size(), "0");
  for (const auto& s : specs) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("--delta expects i:EXPR, got '" + s + "'");
    std::size_t i = 0;
    try {
      i = std::stoul(s.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("--delta index is not a number in '" + s + "'");
    }
    if (i < 1 || i > f.gens.size()) throw UsageError("--delta index out of range in '" + s + "'");
    out[i - 1] = s.substr(colon + 1);
  }
  return out;
}

IdealFile perturbed_file(const IdealFile& f, const std::vector<std::string>& deltas) {
  IdealFile g = f;
  g.gens.clear();
  g.sources.clear();
  for (std::size_t i = 0; i < f.gens.size(); ++i) {
    std::string src = "(" + f.sources[i] + ") + (" + deltas[i] + ")";
    g.sources.push_back(src);
    g.gens.push_back(parse_expression(src, f.names));
  }
  return g;
}

// perturb() rejects deltas with a term at or below mu.
void check_deltas(const IdealFile& f, const std::vector<std::string>& deltas, const Rational& mu) {
  PerturbationSpec spec{f.expand(), mu, f.form(), {}};
  for (const auto& d : deltas) spec.deltas.push_back(expand(parse_expression(d, f.names), f.form(), f.prec));
  perturb(spec);
}

struct Outcome {
  Json report;
  int code = kOk;
};

Outcome run_divide(const IdealInput& in, const std::string& dividend, std::optional<std::uint64_t> shuffle) {
  IdealFile f = in.load();
  if (f.gens.empty()) throw UsageError("divide needs at least one divisor");
  if (dividend.empty()) throw UsageError("divide needs --dividend");
  auto ideal = f.expand();
  Series F = expand(parse_expression(dividend, f.names), f.form(), f.prec);
  DivisionOptions opts;
  opts.shuffle_seed = shuffle;
  auto r = hironaka_divide(F, ideal.gens, f.prec, opts);
  Series defect = division_defect(F, ideal.gens, r);
  bool holds = defect.truncated(f.prec).empty();
  Json report{{"command", "divide"},
              {"status", holds ? "ok" : "claims-fail"},
              {"window", window(f.form(), r.mu)},
              {"exact", r.exact},
              {"steps", r.steps},
              {"dividend", series_to_json(F, f.names)},
              {"divisors", series_list(ideal.gens, f.names)},
              {"quotients", series_list(r.quotients, f.names)},
              {"remainder", series_to_json(r.remainder, f.names)},
              {"region_heads", exponents(r.regions.heads())},
              {"reconstruction_holds", holds}};
  if (shuffle) report["seed"] = *shuffle;
  return {report, holds ? kOk : kUndecided};
}

Outcome run_sbasis(const IdealInput& in, bool complete_mode, const BasisOptions& opts) {
  IdealFile f = in.load();
  if (f.gens.empty()) throw UsageError("sbasis needs at least one generator");
  auto ideal = f.expand();
  CertifiedBasis b = complete_mode ? complete(ideal, f.form(), f.prec, opts) : becker_check(ideal.gens, f.prec, opts);
  Json report{{"command", complete_mode ? "sbasis complete" : "sbasis check"},
              {"status", b.verified ? "ok" : "claims-fail"},
              {"window", window(b.form, b.mu)},
              {"coprime_criterion", opts.coprime_criterion}};
  report["basis"] = basis_json(b, f.names);
  if (complete_mode && b.verified) report["diagram"] = to_json(diagram_of(b));
  return {report, b.verified ? kOk : kUndecided};
}

Outcome run_diagram(const IdealInput& in, const BasisOptions& opts) {
  IdealFile f = in.load();
  auto b = complete(f.expand(), f.form(), f.prec, opts);
  if (!b.verified) return {Json{{"command", "diagram"}, {"status", "undecided"}, {"note", b.note}}, kUndecided};
  auto d = diagram_of(b);
  return {Json{{"command", "diagram"}, {"status", "ok"}, {"window", window(d.form, d.certified_to)}, {"diagram", to_json(d)}},
          kOk};
}

Outcome run_hs(const IdealInput& in, unsigned eta, const BasisOptions& opts) {
  IdealFile f = in.load();
  if (Rational(eta) > f.prec) throw UsageError("--eta exceeds the working precision " + f.prec.get_str());
  auto std_form = LinearForm::standard(f.names.size());
  auto b = complete(f.expand(std_form, f.prec), std_form, f.prec, opts);
  if (!b.verified) return {Json{{"command", "hs"}, {"status", "undecided"}, {"note", b.note}}, kUndecided};
  return {Json{{"command", "hs"},
               {"status", "ok"},
               {"window", window(std_form, f.prec)},
               {"eta", eta},
               {"table", hilbert_samuel(b, eta)}},
          kOk};
}

Outcome run_oracle_hs(const IdealInput& in, unsigned eta) {
  IdealFile f = in.load();
  auto ideal = f.expand(LinearForm::standard(f.names.size()), std::max(f.prec, Rational(eta)));
  std::vector<std::uint64_t> table;
  for (unsigned e = 0; e <= eta; ++e) table.push_back(oracle_jet_quotient_dim(ideal, e));
  return {Json{{"command", "oracle hs"}, {"status", "ok"}, {"eta", eta}, {"table", table}}, kOk};
}

Outcome run_flat(const IdealInput& in, std::size_t k, const std::string& wprec, const BasisOptions& opts) {
  IdealFile f = in.load();
  std::optional<Rational> w;
  if (!wprec.empty()) w = parse_rational(wprec);
  auto r = flatness_weight_search(expander_of(f), f.names.size(), k, f.prec, w, opts);
  Json report{{"command", "flat"}, {"status", "ok"}};
  report.update(flatness_json(r));
  return {report, kOk};
}

Outcome run_dim(const IdealInput& in, std::size_t trials, std::uint64_t seed, const BasisOptions& opts) {
  IdealFile f = in.load();
  auto std_form = LinearForm::standard(f.names.size());
  auto r = axis_vertex_dimension(f.expand(std_form, f.prec), f.prec, trials, seed, opts);
  Json report{{"command", "dim"}, {"status", "ok"}, {"window", window(std_form, f.prec)}, {"seed", seed}};
  report.update(dimension_json(r));
  return {report, kOk};
}

Outcome run_reduction(const IdealInput& in, std::size_t k, std::optional<unsigned> eta, const BasisOptions& opts) {
  IdealFile f = in.load();
  auto r = reduction_exponent(expander_of(f), f.names.size(), k, f.prec, eta, opts);
  bool holds = r.inclusion_holds;
  Json ids = Json::array();
  for (const auto& c : r.identities) {
    ids.push_back(Json{{"m", c.m}, {"holds", c.holds}});
    holds = holds && c.holds;
  }
  return {Json{{"command", "reduction"},
               {"status", holds ? "ok" : "claims-fail"},
               {"window", window(LinearForm::standard(f.names.size()), f.prec)},
               {"k", r.k},
               {"axis_degrees", r.axis_degrees},
               {"d", r.d},
               {"eta", r.eta},
               {"inclusion_holds", r.inclusion_holds},
               {"failing_monomials", exponents(r.failing_monomials)},
               {"identities", ids},
               {"diagram", to_json(r.diagram)}},
          holds ? kOk : kUndecided};
}

// True when the staircases of a and b agree on every exponent with L <= mu.
bool agree_below(const Diagram& a, const Diagram& b, const Rational& mu) {
  bool same = true;
  for_each_exponent_within(a.form, mu, [&](const Exponent& e) { same = same && a.contains(e) == b.contains(e); });
  return same;
}

Outcome run_perturb(const IdealInput& in, const Rational& mu, const std::vector<std::string>& delta_specs,
                    std::uint64_t seed, const BasisOptions& opts) {
  IdealFile f = in.load();
  if (f.gens.empty()) throw UsageError("perturb needs at least one generator");
  if (mu >= f.prec) throw UsageError("--mu must be below the working precision");
  bool seeded = delta_specs.empty();
  auto deltas = seeded ? random_deltas(f, mu, seed) : explicit_deltas(f, delta_specs);
  check_deltas(f, deltas, mu);
  IdealFile g = perturbed_file(f, deltas);
  auto base = complete(f.expand(), f.form(), f.prec, opts);
  auto pert = complete(g.expand(), g.form(), g.prec, opts);
  Json report{{"command", "perturb"}, {"window", window(f.form(), f.prec)}, {"jet_order", to_json(mu)}};
  if (seeded) report["seed"] = seed;
  report["deltas"] = deltas;
  report["perturbed"] = series_list(g.expand().gens, f.names);
  if (!base.verified || !pert.verified) {
    report["status"] = "undecided";
    return {report, kUndecided};
  }
  auto da = diagram_of(base), db = diagram_of(pert);
  bool agree = agree_below(da, db, mu);
  report["status"] = agree ? "ok" : "claims-fail";
  report["diagram"] = to_json(da);
  report["perturbed_diagram"] = to_json(db);
  report["claims"] = claims_json(
      {Claim{agree ? Claim::Status::Pass : Claim::Status::Fail, "staircases agree below the jet order",
             "membership compared for every exponent with L <= " + mu.get_str()}});
  return {report, agree ? kOk : kUndecided};
}

Json pipeline_json(const StabilityPipeline& p) {
  Json out{{"dimension", dimension_json(p.dim)}, {"hs", p.hs}};
  out["flatness"] = p.flat ? flatness_json(*p.flat) : Json(nullptr);
  return out;
}

Outcome run_ci(const IdealInput& in, const Rational& mu, const std::vector<std::string>& delta_specs,
               std::size_t trials, std::uint64_t seed, const BasisOptions& basis) {
  IdealFile f = in.load();
  if (f.gens.empty()) throw UsageError("ci-experiment needs at least one generator");
  bool seeded = delta_specs.empty();
  auto deltas = seeded ? random_deltas(f, mu, seed) : explicit_deltas(f, delta_specs);
  check_deltas(f, deltas, mu);
  IdealFile g = perturbed_file(f, deltas);
  CiExperimentOptions opts{trials, seed, basis};
  auto r = ci_stability_experiment(expander_of(f), expander_of(g), f.names.size(), mu, opts);
  bool equal = r.axis_equal && r.flat_equal && r.hs_equal;
  // Equality is only claimed for complete intersections with mu >= mu0.
  bool claimed = r.complete_intersection_shape && r.mu_at_least_mu0;
  Claim::Status status = !claimed ? Claim::Status::NotApplicable : equal ? Claim::Status::Pass : Claim::Status::Fail;
  Json report{{"command", "ci-experiment"},
              {"status", status == Claim::Status::Fail ? "claims-fail" : "ok"},
              {"window", window(LinearForm::standard(f.names.size()), mu)},
              {"seed", seed},
              {"matrix", to_json(r.base.dim.matrix)},
              {"deltas", deltas},
              {"generators", r.generators},
              {"complete_intersection_shape", r.complete_intersection_shape},
              {"mu1", r.mu1},
              {"mu2", r.mu2},
              {"mu0", r.mu0},
              {"mu_at_least_mu0", r.mu_at_least_mu0},
              {"axis_equal", r.axis_equal},
              {"flat_equal", r.flat_equal},
              {"hs_equal", r.hs_equal},
              {"claims", claims_json({Claim{status, "perturbation keeps the Hilbert-Samuel data",
                                            "axis vertices, flatness and H tables compared on the window"}})},
              {"base", pipeline_json(r.base)},
              {"perturbed", pipeline_json(r.perturbed)}};
  return {report, status == Claim::Status::Fail ? kUndecided : kOk};
}

Outcome run_example82(unsigned mu, const std::string& h, const BasisOptions& opts) {
  const std::vector<std::string> names{"x", "y", "z"};
  auto r = cm_counterexample_runner(mu, h, opts);
  Json report{{"command", "example82"},
              {"status", r.all_pass() ? "ok" : "claims-fail"},
              {"mu", r.mu},
              {"h", r.h},
              {"degenerate", r.degenerate},
              {"window", window(LinearForm::standard(3), r.std_prec)},
              {"weighted_window", window(r.flat.weighted.form, r.weighted_prec)},
              {"claims", claims_json(r.claims)},
              {"diagram", to_json(r.diagram)},
              {"flatness", flatness_json(r.flat)},
              {"perturbed_flatness", flatness_json(r.perturbed_flat)},
              {"s23", series_to_json(r.s23, names)},
              {"s23_expected", series_to_json(r.s23_expected, names)},
              {"hs", r.hs},
              {"hs_perturbed", r.hs_perturbed}};
  report["first_hs_difference"] = r.first_hs_difference ? Json(*r.first_hs_difference) : Json(nullptr);
  return {report, r.all_pass() ? kOk : kUndecided};
}

Json validation_json(const TowerValidation& v) {
  Json out = Json::array();
  for (const auto& c : v.checks)
    out.push_back(Json{{"condition", c.condition}, {"level", c.level}, {"holds", c.holds}, {"detail", c.detail}});
  return out;
}

Outcome run_tower_build(const IdealInput& in, std::uint64_t seed, const std::string& out_path) {
  IdealFile f = in.load();
  if (f.gens.empty()) throw UsageError("tower build needs at least one generator");
  auto std_form = LinearForm::standard(f.names.size());
  Tower t = build_tower(f.expand(std_form, f.prec).gens, f.prec, seed, f.names);
  Json tower = tower_to_json(t);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << tower.dump(2) << "\n";
  }
  auto v = validate_tower(t);
  const char* status = t.undecided ? "undecided" : v.all_pass() ? "ok" : "claims-fail";
  Json report{{"command", "tower build"},
              {"status", status},
              {"window", window(std_form, f.prec)},
              {"seed", seed},
              {"matrix", to_json(t.change)},
              {"validation", validation_json(v)},
              {"tower", tower}};
  return {report, t.undecided || !v.all_pass() ? kUndecided : kOk};
}

Outcome run_tower_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.contains("tower")) doc = doc["tower"]; // accepts a tower build report too
  Tower t = tower_from_json(doc);
  auto v = validate_tower(t);
  const char* status = v.all_pass() ? (t.undecided ? "undecided" : "ok") : "claims-fail";
  return {Json{{"command", "tower validate"},
               {"status", status},
               {"window", window(LinearForm::standard(t.n), t.mu)},
               {"seed", t.seed},
               {"matrix", to_json(t.change)},
               {"undecided", t.undecided},
               {"validation", validation_json(v)}},
          v.all_pass() && !t.undecided ? kOk : kUndecided};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local standard bases, diagrams of initial exponents and equisingularity towers"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand; inherited below
  std::uint64_t seed = 0;
  bool no_coprime = false;
  std::size_t budget = 400;
  app.add_option("--seed", seed, "seed for every random choice")->capture_default_str();
  app.add_flag("--no-coprime", no_coprime, "do not skip pairs with coprime heads");
  app.add_option("--budget", budget, "largest standard basis a completion may build")->capture_default_str();

  IdealInput in;
  std::function<Outcome()> action;

  std::string dividend;
  bool shuffle = false;
  auto* divide = app.add_subcommand("divide", "Hironaka division of --dividend by the generators");
  in.attach(divide);
  divide->add_option("--dividend", dividend, "expression to divide");
  divide->add_flag("--shuffle", shuffle, "process tied terms in a seeded random order");

  auto* sbasis = app.add_subcommand("sbasis", "standard bases");
  sbasis->require_subcommand(1);
  auto* check = sbasis->add_subcommand("check", "Becker criterion on the generators as given");
  auto* comp = sbasis->add_subcommand("complete", "complete the generators to a certified standard basis");
  in.attach(check);
  in.attach(comp);

  auto* diagram = app.add_subcommand("diagram", "vertices of the diagram of initial exponents");
  in.attach(diagram);

  unsigned eta = 0;
  auto* hs = app.add_subcommand("hs", "Hilbert-Samuel function H(0..eta)");
  in.attach(hs);
  hs->add_option("--eta", eta, "last level")->required();

  std::size_t k = 0;
  std::string wprec;
  auto* flat = app.add_subcommand("flat", "flatness over the last n - k variables");
  in.attach(flat);
  flat->add_option("--k", k, "number of leading variables")->required();
  flat->add_option("--wprec", wprec, "precision under the weighted form (default l0 * mu)");

  std::size_t trials = 4;
  auto* dim = app.add_subcommand("dim", "dimension bound from axis vertices");
  in.attach(dim);
  dim->add_option("--trials", trials, "coordinate changes to try, the identity first")->capture_default_str();

  std::optional<unsigned> red_eta;
  auto* reduction = app.add_subcommand("reduction", "reduction exponent d and its jet-level identities");
  in.attach(reduction);
  reduction->add_option("--k", k, "number of leading variables")->required();
  reduction->add_option("--eta", red_eta, "oracle jet level (default d + 3)");

  std::string mu_text;
  std::vector<std::string> deltas;
  auto* perturb_cmd = app.add_subcommand("perturb", "perturb above the jet order and compare staircases");
  in.attach(perturb_cmd);
  perturb_cmd->add_option("--mu", mu_text, "jet order kept fixed")->required();
  perturb_cmd->add_option("--delta", deltas, "i:EXPR added to generator i (default: seeded random)");

  auto* ci = app.add_subcommand("ci-experiment", "compare the pipeline on I and a jet-equal perturbation");
  in.attach(ci);
  ci->add_option("--mu", mu_text, "jet order")->required();
  ci->add_option("--delta", deltas, "i:EXPR added to generator i (default: seeded random)");
  ci->add_option("--trials", trials, "coordinate changes to try")->capture_default_str();

  unsigned ex_mu = 8;
  std::string h = "z";
  auto* ex = app.add_subcommand("example82", "the non-Cohen-Macaulay perturbation of x^8, y^5 + ..., x^2 y^3 + ...");
  ex->set_help_flag("--help", "Print this help message and exit"); // --h is the perturbation
  ex->add_option("--mu", ex_mu, "jet order, at least 8")->capture_default_str();
  ex->add_option("--h", h, "perturbation h(z) with h(0) = 0")->capture_default_str();

  std::string out_path, tower_path;
  auto* tower = app.add_subcommand("tower", "generalized-discriminant towers");
  tower->require_subcommand(1);
  auto* build = tower->add_subcommand("build", "build the tower of the product of the generators");
  in.attach(build);
  build->add_option("--out", out_path, "also write the tower JSON here");
  auto* validate = tower->add_subcommand("validate", "re-check a tower JSON");
  validate->add_option("tower", tower_path, "tower JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force linear algebra");
  oracle->require_subcommand(1);
  auto* ohs = oracle->add_subcommand("hs", "dim K[x]/(I + m^(eta+1)) for eta = 0..eta");
  in.attach(ohs);
  ohs->add_option("--eta", eta, "last level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  BasisOptions opts;
  opts.coprime_criterion = !no_coprime;
  opts.max_elements = budget;

  try {
    Outcome r;
    if (*divide) r = run_divide(in, dividend, shuffle ? std::optional<std::uint64_t>(seed) : std::nullopt);
    else if (*check) r = run_sbasis(in, false, opts);
    else if (*comp) r = run_sbasis(in, true, opts);
    else if (*diagram) r = run_diagram(in, opts);
    else if (*hs) r = run_hs(in, eta, opts);
    else if (*flat) r = run_flat(in, k, wprec, opts);
    else if (*dim) r = run_dim(in, trials, seed, opts);
    else if (*reduction) r = run_reduction(in, k, red_eta, opts);
    else if (*perturb_cmd) r = run_perturb(in, parse_rational(mu_text), deltas, seed, opts);
    else if (*ci) r = run_ci(in, parse_rational(mu_text), deltas, trials, seed, opts);
    else if (*ex) r = run_example82(ex_mu, h, opts);
    else if (*build) r = run_tower_build(in, seed, out_path);
    else if (*validate) r = run_tower_validate(tower_path);
    else if (*ohs) r = run_oracle_hs(in, eta);
    std::cout << r.report.dump(2) << "\n";
    return r.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Precision shortfalls, budgets and failed regularity searches: the
    // question is not decided inside the window.
    std::cout << Json{{"status", "undecided"}, {"reason", e.what()}}.dump(2) << "\n";
    return kUndecided;
  }
}

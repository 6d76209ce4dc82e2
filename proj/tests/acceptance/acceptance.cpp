// Acceptance suite: one PASS/FAIL line per criterion. Every check is exact;
// the only tolerances are the wall-clock budgets printed with each line.

#include "locbasis/approx.hpp"
#include "locbasis/errors.hpp"
#include "locbasis/oracle.hpp"
#include "locbasis/parse.hpp"
#include "locbasis/symmetric.hpp"
#include "locbasis/tower.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace locbasis;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

// Collects failures for one criterion; the first few are printed.
struct Log {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool agree_to(const Series& a, const Series& b, const Rational& mu) { return (a - b).truncated(mu).empty(); }

IdealExpander expander_of(const IdealFile& f) {
  return [f](const LinearForm& form, const Rational& prec) { return f.expand(form, prec); };
}

IdealFile ideal_file(const std::vector<std::string>& names, const std::vector<std::string>& gens) {
  IdealFile f;
  f.names = names;
  for (const auto& g : gens) {
    f.sources.push_back(g);
    f.gens.push_back(parse_expression(g, names));
  }
  return f;
}

// Membership in the staircase agrees for every b with L(b) <= l.
bool staircases_agree(const Diagram& a, const Diagram& b, const Rational& l) {
  bool same = true;
  for_each_exponent_within(a.form, l, [&](const Exponent& e) { same = same && a.contains(e) == b.contains(e); });
  return same;
}

// Sum of c_b x^b over the monomials of total degree exactly deg, with
// coefficients in [-2, 2].
Series random_homogeneous(std::size_t n, unsigned deg, std::mt19937_64& rng) {
  auto L = LinearForm::standard(n);
  std::uniform_int_distribution<long> coeff(-2, 2);
  Series s(L);
  for_each_exponent_within(L, deg, [&](const Exponent& b) {
    if (b.total() == deg) s.add_term(b, Rational(coeff(rng)));
  });
  return s;
}

// ---------------------------------------------------------------------------

void example82(Log& log) {
  auto L = LinearForm::standard(3);
  for (unsigned mu : {8u, 12u}) {
    std::string tag = "mu=" + std::to_string(mu) + ": ";
    Rational m(mu);
    auto base = ideal_file(xyz, {"x^8", "y^5 + y^2*z^4*exp(z)", "x^2*y^3 + x^2*z^4*exp(z)"});
    auto pert = ideal_file(xyz, {"x^8", "y^5 + y^2*z^4*exp(z) + y^2*z^" + std::to_string(mu - 2) + "*z",
                                 "x^2*y^3 + x^2*z^4*exp(z)"});

    // (a) Becker's criterion on the generators themselves.
    auto F = base.expand(L, m);
    auto check = becker_check(F.gens, m);
    log.expect(check.verified, tag + "(a) becker_check rejects {F1,F2,F3}");

    // (b) vertices of the diagram.
    auto d = diagram_of(complete(F, L, m));
    std::vector<Exponent> want{Exponent{8, 0, 0}, Exponent{0, 5, 0}, Exponent{2, 3, 0}};
    bool same = d.vertices.size() == want.size();
    for (const auto& v : want) same = same && std::find(d.vertices.begin(), d.vertices.end(), v) != d.vertices.end();
    log.expect(same, tag + "(b) unexpected vertices");

    // (c) flat over K{z} under split(2, l0).
    auto flat = flatness_weight_search(expander_of(base), 3, 2, m);
    log.expect(flat.verdict == FlatVerdict::Flat && flat.product.product, tag + "(c) not FLAT");

    // (d) S(G2, G3) = x^2 y^2 z^{mu-2} h(z) with h = z, i.e. the monomial
    // x^2 y^2 z^{mu-1}, on the whole certified window.
    auto G = pert.expand(L, Rational(2 * mu));
    Series s = s_series(G.gens[1], G.gens[2]);
    Series target = Series::monomial(L, Exponent{2, 2, mu - 1});
    bool certified = s.precision().reaches(m);
    log.expect(certified && s == target.truncated(s.precision().bound()),
               tag + "(d) S(G2,G3) = " + s.to_string(xyz) + " @" + s.precision().to_string());

    // (e) the perturbation leaves a staircase vertex off N^2 x {0}.
    auto pflat = flatness_weight_search(expander_of(pert), 3, 2, m, Rational(9 * (mu + 1)));
    bool offbase = false;
    for (const auto& v : pflat.weighted.vertices) offbase = offbase || v[2] != 0;
    log.expect(pflat.verdict == FlatVerdict::NotFlatAtMu && offbase, tag + "(e) perturbed ideal still flat");
  }
  // The packaged runner must agree with the checks above.
  for (unsigned mu : {8u, 12u}) log.expect(cm_counterexample_runner(mu, "z").all_pass(), "runner fails a claim");
  log.summary = "mu in {8, 12}, h = z, parts (a)-(e) and the runner";
}

void division_suite(Log& log) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 4), terms(1, 6), ndiv(1, 4), dims(1, 3), mus(2, 10);
  std::size_t instances = 0, shuffles = 0;
  for (int trial = 0; trial < 540; ++trial) {
    std::size_t n = static_cast<std::size_t>(dims(rng));
    LinearForm L = trial % 3 == 0   ? LinearForm::standard(n)
                   : trial % 3 == 1 ? LinearForm::split(n, 1 + trial % n, 2 + trial % 3)
                                    : LinearForm(std::vector<Rational>(n, Rational(3, 2)));
    Rational mu = mus(rng);
    bool exact_inputs = trial % 2 == 0;
    auto random_series = [&](bool nonconstant) {
      Series s = exact_inputs ? Series(L) : Series(L, Precision::at(mu + 2));
      for (int t = 0, c = terms(rng); t < c; ++t) {
        Exponent e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<Exponent::value_type>(deg(rng));
        if (nonconstant && e.is_zero()) e[static_cast<std::size_t>(trial) % n] = 1;
        s.add_term(e, coef(rng));
      }
      return s;
    };
    Series f = random_series(false);
    std::vector<Series> g;
    for (int i = 0, c = ndiv(rng); i < c; ++i) {
      Series gi = random_series(true);
      if (gi.truncated(mu).empty()) gi.add_term(Exponent::unit(n, 0), 1);
      g.push_back(gi);
    }
    std::string tag = "instance " + std::to_string(trial) + ": ";
    DivisionResult r;
    try {
      r = hironaka_divide(f, g, mu);
    } catch (const Error& e) {
      log.expect(false, tag + e.what());
      continue;
    }
    ++instances;
    log.expect(division_defect(f, g, r).truncated(mu).empty(), tag + "reconstruction fails");
    for (std::size_t i = 0; i < g.size(); ++i)
      for (const auto& [e, c] : r.quotients[i].terms())
        log.expect(r.regions.region_of(e + r.regions.heads()[i]) == i, tag + "quotient term outside its region");
    for (const auto& [e, c] : r.remainder.terms())
      log.expect(!r.regions.region_of(e).has_value(), tag + "remainder term inside a region");
    for (std::uint64_t seed : {1ull, 2ull}) {
      auto s = hironaka_divide(f, g, mu, DivisionOptions{seed + 1000 * trial});
      ++shuffles;
      log.expect(s.quotients == r.quotients && s.remainder == r.remainder, tag + "order permutation changes output");
    }
  }
  log.expect(instances >= 500, "only " + std::to_string(instances) + " instances");
  log.summary = std::to_string(instances) + " instances, " + std::to_string(shuffles) + " permuted reruns";
}

void hilbert_samuel_suite(Log& log) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> deg(0, 4), coef(-3, 3), ngens(1, 3), dims(1, 3);
  std::vector<std::pair<std::string, IdealPresentation>> ideals;
  auto monomial = [&](std::size_t n) {
    Exponent e(n);
    do {
      for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<Exponent::value_type>(deg(rng));
    } while (e.is_zero());
    return e;
  };
  for (int i = 0; i < 24; ++i) { // monomial ideals
    std::size_t n = static_cast<std::size_t>(dims(rng));
    auto L = LinearForm::standard(n);
    IdealPresentation I{{}, default_names(n)};
    for (int k = 0, c = ngens(rng); k < c; ++k) I.gens.push_back(Series::monomial(L, monomial(n)));
    ideals.emplace_back("monomial " + std::to_string(i), I);
  }
  for (int i = 0; i < 30; ++i) { // binomial ideals
    std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    auto L = LinearForm::standard(n);
    IdealPresentation I{{}, default_names(n)};
    for (int k = 0, c = ngens(rng); k < c; ++k) {
      Exponent a = monomial(n), b = monomial(n);
      if (a == b) b[0] += 1;
      Series g = Series::monomial(L, a);
      int cb = coef(rng);
      g.add_term(b, Rational(cb == 0 ? 1 : cb));
      I.gens.push_back(g);
    }
    ideals.emplace_back("binomial " + std::to_string(i), I);
  }
  auto ex = ideal_file(xyz, {"x^8", "y^5 + y^2*z^4*exp(z)", "x^2*y^3 + x^2*z^4*exp(z)"});
  ideals.emplace_back("(x^8, y^5 + y^2 z^4 e^z, x^2 y^3 + x^2 z^4 e^z)", ex.expand(LinearForm::standard(3), 8));

  const unsigned eta_max = 6;
  for (const auto& [name, I] : ideals) {
    auto L = LinearForm::standard(I.dim());
    auto basis = complete(I, L, Rational(eta_max));
    auto hs = hilbert_samuel(basis, eta_max);
    for (unsigned eta = 0; eta <= eta_max; ++eta) {
      auto oracle = oracle_jet_quotient_dim(I, eta);
      log.expect(hs[eta] == oracle, name + ": H(" + std::to_string(eta) + ") = " + std::to_string(hs[eta]) +
                                        ", oracle " + std::to_string(oracle));
    }
  }
  log.expect(ideals.size() >= 50, "too few ideals");
  log.summary = std::to_string(ideals.size()) + " ideals, eta = 0..6";
}

void stability_suite(Log& log) {
  const unsigned mu = 6;
  const Rational window = 10;
  std::mt19937_64 rng(66);

  // Finite complement: (x^2, y^3) and degree-7 perturbations.
  auto L2 = LinearForm::standard(2);
  IdealPresentation base{{Series::monomial(L2, Exponent{2, 0}), Series::monomial(L2, Exponent{0, 3})}, xy};
  auto d0 = diagram_of(complete(base, L2, window));
  std::size_t finite = 0;
  for (int trial = 0; trial < 24; ++trial) {
    PerturbationSpec spec{base, Rational(mu), L2, {}};
    for (std::size_t i = 0; i < base.gens.size(); ++i) spec.deltas.push_back(random_homogeneous(2, mu + 1, rng));
    auto d = diagram_of(complete(perturb(spec), L2, window));
    log.expect(d.vertices == d0.vertices, "(x^2,y^3) trial " + std::to_string(trial) + ": diagram changed");
    ++finite;
  }

  // Infinite complement: seeds in x, y, z whose diagrams have l0 <= mu.
  const std::vector<std::vector<std::string>> seeds{
      {"x^2", "y^3"},         {"x^2 - y*z", "y^3"},     {"x*y", "y^2 - z^3"},   {"x^2 + y^2", "x*z"},
      {"y^2 - x^3"},          {"x*y*z"},                {"x^3 + y^3 + z^3"},    {"x^2 - y^2*z", "x*y"},
      {"x*z - y^2", "x^2"},   {"x^2*y - z^3"},          {"x^4 - y^2", "z^2"},   {"x*y - z^2", "y^3 - x^2"},
  };
  auto L3 = LinearForm::standard(3);
  std::size_t infinite = 0;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    auto I = ideal_file(xyz, seeds[s]).expand(L3, window);
    auto d = diagram_of(complete(I, L3, window));
    std::uint64_t l0 = 0;
    for (const auto& v : d.vertices) l0 = std::max<std::uint64_t>(l0, v.total());
    if (l0 > mu) continue;
    for (int trial = 0; trial < 3; ++trial) {
      PerturbationSpec spec{I, Rational(mu), L3, {}};
      for (std::size_t i = 0; i < I.gens.size(); ++i) spec.deltas.push_back(random_homogeneous(3, mu + 1, rng));
      auto dp = diagram_of(complete(perturb(spec), L3, window));
      std::string tag = "seed " + std::to_string(s) + " trial " + std::to_string(trial) + ": ";
      for (unsigned l = static_cast<unsigned>(l0); l <= mu; ++l)
        log.expect(staircases_agree(d, dp, l), tag + "staircases differ below " + std::to_string(l));
      for (const auto& v : d.vertices) log.expect(dp.contains(v), tag + "perturbed staircase misses " + v.to_string());
      ++infinite;
    }
  }
  log.expect(finite >= 20, "too few finite-complement perturbations");
  log.expect(infinite >= 20, "too few infinite-complement perturbations");
  log.summary = std::to_string(finite) + " finite-complement and " + std::to_string(infinite) +
                " infinite-complement perturbations, mu = 6";
}

void discriminant_suite(Log& log) {
  for (unsigned p = 1; p <= 4; ++p)
    for (unsigned j = 1; j <= p; ++j)
      log.expect(expand_elementary(generalized_discriminant(p, j).expr) == raw_discriminant(p, j),
                 "round trip fails at p=" + std::to_string(p) + " j=" + std::to_string(j));

  std::mt19937_64 rng(200);
  std::uniform_int_distribution<unsigned> degree(1, 4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    // Random composition of p into multiplicities, one distinct root each.
    unsigned p = degree(rng);
    std::vector<unsigned> mult;
    for (unsigned left = p; left > 0;) {
      unsigned m = std::uniform_int_distribution<unsigned>(1, left)(rng);
      mult.push_back(m);
      left -= m;
    }
    std::vector<Rational> roots;
    while (roots.size() < mult.size()) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::vector<Rational> poly{Rational(1)}; // coefficient of X^k at index k
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (unsigned k = 0; k < mult[i]; ++k) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t c = 0; c < poly.size(); ++c) {
          next[c + 1] += poly[c];
          next[c] -= poly[c] * roots[i];
        }
        poly = next;
      }
    std::vector<Rational> coeffs(poly.begin(), poly.end() - 1);
    unsigned j = distinct_root_count_check(coeffs);
    log.expect(p - j == roots.size(), "trial " + std::to_string(trial) + ": " + std::to_string(p - j) +
                                          " distinct roots reported, " + std::to_string(roots.size()) + " built");
  }
  log.summary = "round trips for p <= 4, 200 root-multiplicity polynomials";
}

void tower_suite(Log& log) {
  auto L = LinearForm::standard(2);
  // Preparation works under a weight up to about 4.5 on x, so a window of 60
  // leaves the outputs certified past 10.
  auto series = [&](const std::string& s, const Rational& prec = 60) { return parse_series(s, xy, L, prec); };

  // Hand computation: for y^2 + a1 y + a0, Delta_1 = 4 A0 - A1^2.
  log.expect(generalized_discriminant(2, 1).expr == parse_series("4*x - y^2", xy, L, 10),
             "Delta_1 for p = 2 is not 4 A0 - A1^2");

  // Cusp: a = (0, -x^3) gives Delta_1 = -4 x^3, so F_1 = x^3 with unit -4.
  auto cusp = build_tower({series("y^2 - x^3")}, 10, 0, xy);
  log.expect(validate_tower(cusp).all_pass() && !cusp.undecided, "cusp tower does not validate");
  log.expect(cusp.levels[2].degree == 2 && cusp.levels[1].degree == 3, "cusp level degrees are not (2, 3)");
  log.expect(cusp.levels[2].j == 1 && cusp.levels[1].j == 3, "cusp discriminant indices are not (1, 3)");
  auto L1 = LinearForm::standard(1);
  log.expect(cusp.levels[2].discriminant == Series::monomial(L1, Exponent{3}, Rational(-4)),
             "cusp Delta_1 is not -4 x^3");
  log.expect(cusp.levels[0].one, "cusp F_0 is not 1");

  auto node = build_tower({series("y^2 - x^2")}, 10, 0, xy);
  log.expect(validate_tower(node).all_pass() && !node.undecided, "node tower does not validate");
  log.expect(node.levels[2].degree == 2 && node.levels[1].degree == 2, "node level degrees are not (2, 2)");

  // Preparation identity up to mu = 10, polynomial and transcendental inputs.
  const Rational mu = 10;
  for (const std::string f : {"y^2 - x^3", "y^2 + y^3", "y^3 - x*y + x^5*y^4", "y^2*exp(x) - x^3*geom(y)",
                              "x + y^4*exp(x + y)", "y^3*(1 + x) + x^2*y - x^7"}) {
    Series s = series(f);
    auto prep = weierstrass_prepare(s, 1, mu);
    bool certified = prep.P.precision().reaches(mu) && prep.u.precision().reaches(mu);
    log.expect(certified && agree_to(prep.u * prep.P, s, mu), "Weierstrass identity fails for " + f);
  }
  log.summary = "cusp (2,3), node (2,2), six preparations to mu = 10";
}

void reduction_suite(Log& log) {
  struct Case {
    std::string name;
    std::size_t n, k;
    Rational mu;
    unsigned d;
    std::vector<std::string> gens;
  };
  const std::vector<Case> cases{
      {"(x^2, y^3)", 2, 2, 8, 3, {"x^2", "y^3"}},
      {"x^8 example", 3, 2, 14, 11, {"x^8", "y^5 + y^2*z^4*exp(z)", "x^2*y^3 + x^2*z^4*exp(z)"}},
  };
  for (const auto& c : cases) {
    auto names = c.n == 2 ? xy : xyz;
    auto r = reduction_exponent(expander_of(ideal_file(names, c.gens)), c.n, c.k, c.mu);
    log.expect(r.d == c.d, c.name + ": d = " + std::to_string(r.d));
    log.expect(r.eta <= r.d + 3, c.name + ": jet level above d + 3");
    log.expect(r.inclusion_holds, c.name + ": a degree-(d+1) monomial is missing");
    std::size_t identities = 0;
    for (const auto& id : r.identities) {
      log.expect(id.holds, c.name + ": identity fails for m = " + std::to_string(id.m));
      if (id.m == 1 || id.m == 2) ++identities;
    }
    log.expect(identities == 2, c.name + ": identities for m = 1, 2 not both checked");
  }
  log.summary = "(x^2,y^3) d = 3 and the x^8 example d = 11 at k = 2, m = 1, 2";
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Log&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "non-Cohen-Macaulay perturbation end to end", 10, example82},
      {2, "Hironaka division properties", 60, division_suite},
      {3, "Hilbert-Samuel equals the jet oracle", 120, hilbert_samuel_suite},
      {4, "staircase stability under jet perturbation", 60, stability_suite},
      {5, "generalized discriminants", 60, discriminant_suite},
      {6, "equisingularity towers", 30, tower_suite},
      {7, "reduction identities at jet scale", 120, reduction_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = seconds < c.budget_seconds;
    bool pass = log.failures.empty() && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%s; %.2f s of %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                log.summary.c_str(), seconds, c.budget_seconds);
    if (!in_time) std::printf("    over the time budget\n");
    for (std::size_t i = 0; i < log.failures.size() && i < 5; ++i) std::printf("    %s\n", log.failures[i].c_str());
    if (log.failures.size() > 5) std::printf("    ... %zu more\n", log.failures.size() - 5);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "locbasis/approx.hpp"

#include "locbasis/errors.hpp"
#include "locbasis/parse.hpp"

#include <algorithm>
#include <future>

namespace locbasis {

Series jet(const Series& f, const Rational& mu) {
  if (!f.precision().reaches(mu))
    throw PrecisionShortfall("jet of order " + mu.get_str() + " needs precision " + mu.get_str() + ", have " +
                             f.precision().to_string());
  return f.truncated(mu).as_exact();
}

Series jet(const Series& f, const LinearForm& form, const Rational& mu) { return jet(f.rebased(form), mu); }

IdealPresentation perturb(const PerturbationSpec& spec) {
  spec.base.validate();
  if (spec.deltas.size() != spec.base.gens.size())
    throw InvalidArgument("need one delta per generator (" + std::to_string(spec.base.gens.size()) + ")");
  IdealPresentation out{{}, spec.base.names};
  for (std::size_t i = 0; i < spec.deltas.size(); ++i) {
    const Series& d = spec.deltas[i];
    for (const auto& [e, c] : d.terms())
      if (spec.form.within(e, spec.mu))
        throw InvalidArgument("delta " + std::to_string(i + 1) + " has term " + e.to_string() + " of L-value " +
                              spec.form.value(e).get_str() + " <= " + spec.mu.get_str());
    const Series& g = spec.base.gens[i];
    out.gens.push_back(d.is_exact_zero() ? g : g + d.rebased(g.form()));
  }
  return out;
}

namespace {

// Expander applying x -> M x after expanding under the standard form.
IdealExpander changed_expander(const IdealExpander& expand, std::size_t n, Matrix m) {
  return [expand, n, m = std::move(m)](const LinearForm& form, const Rational& prec) {
    // Rebasing from the standard form scales precision by the minimal weight.
    auto std_form = LinearForm::standard(n);
    IdealPresentation ideal = expand(std_form, prec / form.min_weight());
    IdealPresentation out{{}, ideal.names};
    for (const auto& g : ideal.gens) out.gens.push_back(g.substitute_linear(m).rebased(form));
    return out;
  };
}

StabilityPipeline run_pipeline(const IdealExpander& expand, std::size_t n, const Rational& mu, const Matrix& m,
                               std::size_t k, const BasisOptions& options) {
  StabilityPipeline out;
  auto changed = changed_expander(expand, n, m);
  auto std_form = LinearForm::standard(n);
  IdealPresentation ideal = changed(std_form, mu);
  out.dim = axis_vertex_dimension(ideal, mu, 1, 0, options);
  out.dim.matrix = m;
  if (k >= 1 && k < n) out.flat = flatness_weight_search(changed, n, k, mu, {}, options);
  auto basis = complete(ideal, std_form, mu, options);
  if (!basis.verified) throw BudgetExceeded("completion: " + basis.note);
  out.hs = hilbert_samuel(basis, static_cast<unsigned>(floor(mu).get_ui()));
  return out;
}

} // namespace

CiExperimentReport ci_stability_experiment(const IdealExpander& base, const IdealExpander& perturbed, std::size_t n,
                                           const Rational& mu, const CiExperimentOptions& options) {
  CiExperimentReport out;
  out.mu = mu;
  auto std_form = LinearForm::standard(n);
  IdealPresentation ideal = base(std_form, mu);
  out.generators = ideal.gens.size();
  DimensionReport dim = axis_vertex_dimension(ideal, mu, options.trials, options.seed, options.basis);
  out.complete_intersection_shape = dim.k_best == out.generators;
  std::size_t k = dim.k_best;

  auto base_job = std::async(std::launch::async, [&] { return run_pipeline(base, n, mu, dim.matrix, k, options.basis); });
  out.perturbed = run_pipeline(perturbed, n, mu, dim.matrix, k, options.basis);
  out.base = base_job.get();

  out.axis_equal = out.base.dim.k_best == out.perturbed.dim.k_best;
  if (out.base.flat && out.perturbed.flat)
    out.flat_equal = out.base.flat->verdict == out.perturbed.flat->verdict &&
                     out.base.flat->evaluated.vertices == out.perturbed.flat->evaluated.vertices;
  else
    out.flat_equal = !out.base.flat && !out.perturbed.flat;
  out.hs_equal = out.base.hs == out.perturbed.hs;

  // Thresholds from the vertex data: mu1 = max |axis vertex|; mu2 bounds the
  // finite complement of N(I(0)) together with its vertices.
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& v : out.base.dim.diagram.vertices)
      if (v[j] > 0 && v.total() == v[j]) out.mu1 = std::max<std::uint64_t>(out.mu1, v[j]);
  if (out.base.flat) {
    const Diagram& d0 = out.base.flat->evaluated;
    for (const auto& v : d0.vertices) out.mu2 = std::max(out.mu2, v.total());
    for_each_exponent_within(d0.form, d0.certified_to, [&](const Exponent& b) {
      if (!d0.contains(b)) out.mu2 = std::max(out.mu2, b.total());
    });
  } else {
    out.mu2 = out.mu1;
  }
  out.mu0 = std::max(out.mu1, out.mu2);
  out.mu_at_least_mu0 = mu >= Rational(out.mu0);
  return out;
}

std::string to_string(Claim::Status s) {
  switch (s) {
  case Claim::Status::Pass: return "pass";
  case Claim::Status::Fail: return "fail";
  case Claim::Status::NotApplicable: return "n/a";
  }
  return "?";
}

bool CounterexampleReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status != Claim::Status::Fail; });
}

CounterexampleReport cm_counterexample_runner(unsigned mu, const std::string& h, const BasisOptions& options) {
  if (mu < 8) throw InvalidArgument("the example needs mu >= 8");
  const std::vector<std::string> names{"x", "y", "z"};
  auto std_form = LinearForm::standard(3);

  auto h_expr = parse_expression(h, names);
  Series h_series = expand(h_expr, std_form, Rational(2 * mu));
  for (const auto& [e, c] : h_series.terms())
    if (e[0] || e[1]) throw InvalidArgument("h must be a series in z alone");
  if (h_series.constant_term() != 0) throw InvalidArgument("h must vanish at 0");

  CounterexampleReport out;
  out.mu = mu;
  out.h = h;
  out.degenerate = h_series.empty();
  // The standard-form claims are certified well past the perturbation order.
  out.std_prec = Rational(2 * mu);

  const std::string f2 = "y^5 + y^2*z^4*exp(z)";
  const std::string f3 = "x^2*y^3 + x^2*z^4*exp(z)";
  const std::string g2 = f2 + " + y^2*z^" + std::to_string(mu - 2) + "*(" + h + ")";
  IdealFile base, pert;
  base.names = pert.names = names;
  for (const auto& src : {std::string("x^8"), f2, f3}) base.gens.push_back(parse_expression(src, names));
  for (const auto& src : {std::string("x^8"), g2, f3}) pert.gens.push_back(parse_expression(src, names));
  auto base_expander = [base](const LinearForm& f, const Rational& p) { return base.expand(f, p); };
  auto pert_expander = [pert](const LinearForm& f, const Rational& p) { return pert.expand(f, p); };

  auto claim = [&](std::string name, bool ok, std::string detail) {
    out.claims.push_back({ok ? Claim::Status::Pass : Claim::Status::Fail, std::move(name), std::move(detail)});
  };

  // Claim 1: {F1, F2, F3} is a standard basis with the three expected vertices.
  IdealPresentation ideal = base_expander(std_form, out.std_prec);
  std::vector<Series> truncated;
  for (const auto& g : ideal.gens) truncated.push_back(g.truncated(out.std_prec));
  auto check = becker_check(truncated, out.std_prec, options);
  auto completed = complete(ideal, std_form, out.std_prec, options);
  out.diagram = diagram_of(completed);
  std::vector<Exponent> expected{Exponent{2, 3, 0}, Exponent{0, 5, 0}, Exponent{8, 0, 0}};
  std::string vertices;
  for (const auto& v : out.diagram.vertices) vertices += (vertices.empty() ? "" : " ") + v.to_string();
  claim("standard basis", check.verified && out.diagram.vertices == expected,
        std::string(check.verified ? "all pairs reduce" : "a pair fails") + "; vertices " + vertices);

  // Claim 2: flat over K{z} at k = 2 with l0 = 9.
  out.flat = flatness_weight_search(base_expander, 3, 2, Rational(mu), {}, options);
  claim("flat over K{z}", out.flat.verdict == FlatVerdict::Flat && out.flat.l0 == 9 && out.flat.base_matches_evaluated,
        to_string(out.flat.verdict) + " with l0 = " + std::to_string(out.flat.l0));

  // Claim 3: S(G2, G3) = x^2 y^2 z^{mu-2} h exactly.
  IdealPresentation perturbed = pert_expander(std_form, out.std_prec);
  out.s23 = s_series(perturbed.gens[1], perturbed.gens[2]);
  Series target = expand(parse_expression("x^2*y^2*z^" + std::to_string(mu - 2) + "*(" + h + ")", names), std_form,
                         out.std_prec);
  Precision common = min(out.s23.precision(), target.precision());
  bool identity = common.is_exact() ? out.s23 == target
                                    : out.s23.truncated(common.bound()) == target.truncated(common.bound());
  out.s23_expected = common.is_exact() ? target : target.truncated(common.bound());
  claim("s-series identity", identity,
        "S(G2,G3) = " + out.s23.to_string(names) + " up to L-value " + common.to_string());

  // Claim 4: the perturbation destroys flatness via a vertex off N^2 x {0}.
  unsigned h_order = out.degenerate ? 1 : static_cast<unsigned>(floor(h_series.order()).get_ui());
  out.weighted_prec = Rational(9 * (mu + h_order));
  out.perturbed_flat = flatness_weight_search(pert_expander, 3, 2, Rational(mu), out.weighted_prec, options);
  std::string offbase;
  for (const auto& v : out.perturbed_flat.weighted.vertices)
    if (!v.tail_zero(2)) offbase += (offbase.empty() ? "" : " ") + v.to_string();
  if (out.degenerate) {
    out.claims.push_back({Claim::Status::NotApplicable, "perturbed not flat",
                          "h vanishes; the perturbed ideal equals I and stays " +
                              to_string(out.perturbed_flat.verdict)});
  } else {
    claim("perturbed not flat", out.perturbed_flat.verdict == FlatVerdict::NotFlatAtMu && !offbase.empty(),
          to_string(out.perturbed_flat.verdict) + "; off-base vertices " + (offbase.empty() ? "none" : offbase));
  }

  // Informational: Hilbert-Samuel tables over the standard window.
  auto pert_basis = complete(perturbed, std_form, out.std_prec, options);
  unsigned eta_max = 2 * mu;
  out.hs = hilbert_samuel(completed, eta_max);
  out.hs_perturbed = hilbert_samuel(pert_basis, eta_max);
  for (unsigned eta = 0; eta <= eta_max; ++eta)
    if (out.hs[eta] != out.hs_perturbed[eta]) {
      out.first_hs_difference = eta;
      break;
    }
  return out;
}

} // namespace locbasis

#include "locbasis/criteria.hpp"

#include "locbasis/errors.hpp"
#include "locbasis/oracle.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace locbasis {

IdealExpander fixed_expander(IdealPresentation ideal) {
  return [ideal = std::move(ideal)](const LinearForm& form, const Rational&) { return ideal.rebased(form); };
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::string to_string(FlatVerdict v) { return v == FlatVerdict::Flat ? "FLAT" : "NOT-FLAT-AT-MU"; }

namespace {

CertifiedBasis complete_or_throw(const IdealPresentation& ideal, const LinearForm& form, const Rational& mu,
                                 const BasisOptions& options, const char* what) {
  auto basis = complete(ideal, form, mu, options);
  if (!basis.verified) throw BudgetExceeded(std::string(what) + ": " + basis.note);
  return basis;
}

} // namespace

FlatnessReport flatness_weight_search(const IdealExpander& expand, std::size_t n, std::size_t k, const Rational& mu,
                                      std::optional<Rational> weighted_prec, const BasisOptions& options) {
  if (k < 1 || k >= n) throw InvalidArgument("flatness needs 1 <= k < n");
  FlatnessReport out;
  out.k = k;
  out.mu = mu;

  auto evaluated = evaluated_ideal(expand(LinearForm::standard(n), mu), k);
  if (evaluated.trivial) throw InvalidArgument("the evaluated ideal I(0) vanishes at this precision");
  auto std_k = LinearForm::standard(k);
  out.evaluated = diagram_of(complete_or_throw(evaluated.ideal, std_k, mu, options, "completion of I(0)"));
  std::uint64_t max_norm = 0;
  for (const auto& v : out.evaluated.vertices) max_norm = std::max(max_norm, v.total());
  out.l0 = static_cast<std::int64_t>(max_norm) + 1;

  auto split = LinearForm::split(n, k, out.l0);
  out.weighted_prec = weighted_prec.value_or(mu * out.l0);
  auto weighted_ideal = expand(split, out.weighted_prec);
  out.weighted = diagram_of(complete_or_throw(weighted_ideal, split, out.weighted_prec, options,
                                              "completion under the split form"));
  out.product = product_structure_check(out.weighted, k);

  std::vector<Exponent> base_low, eval_low;
  for (const auto& b : out.product.base)
    if (Rational(b.total()) <= mu && out.product.product) base_low.push_back(b);
  for (const auto& v : out.evaluated.vertices) eval_low.push_back(v);
  std::sort(base_low.begin(), base_low.end());
  std::sort(eval_low.begin(), eval_low.end());
  out.base_matches_evaluated = out.product.product && base_low == eval_low;
  out.verdict = out.product.product ? FlatVerdict::Flat : FlatVerdict::NotFlatAtMu;
  return out;
}

std::size_t leading_axis_count(const Diagram& d) {
  std::size_t k = 0;
  while (k < d.n) {
    bool found = std::any_of(d.vertices.begin(), d.vertices.end(), [&](const Exponent& v) {
      return v[k] > 0 && v.total() == v[k];
    });
    if (!found) break;
    ++k;
  }
  return k;
}

Matrix random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-1, 1);
  while (true) {
    // Permuted product of unit lower and unit upper triangular matrices has
    // determinant +-1; reject the rare draws with entries outside [-3, 3].
    std::vector<std::vector<long>> lo(n, std::vector<long>(n, 0)), up = lo;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i][i] = up[i][i] = 1;
      for (std::size_t j = 0; j < i; ++j) lo[i][j] = small(rng);
      for (std::size_t j = i + 1; j < n; ++j) up[i][j] = small(rng);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix m(n, std::vector<Rational>(n));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long v = 0;
        for (std::size_t t = 0; t < n; ++t) v += lo[perm[i]][t] * up[t][j];
        if (v < -3 || v > 3) ok = false;
        m[i][j] = v;
      }
    if (ok) return m;
  }
}

DimensionReport axis_vertex_dimension(const IdealPresentation& ideal, const Rational& mu, std::size_t trials,
                                      std::uint64_t seed, const BasisOptions& options) {
  ideal.validate();
  if (trials == 0) throw InvalidArgument("at least one trial is required");
  const std::size_t n = ideal.dim();
  auto std_form = LinearForm::standard(n);
  IdealPresentation base = ideal.rebased(std_form);

  std::vector<Matrix> matrices{identity_matrix(n)};
  std::mt19937_64 seeds(seed);
  while (matrices.size() < trials) matrices.push_back(random_unimodular(n, seeds()));

  auto run = [&](std::size_t t) {
    IdealPresentation changed{{}, base.names};
    for (const auto& g : base.gens) changed.gens.push_back(t == 0 ? g : g.substitute_linear(matrices[t]));
    return diagram_of(complete_or_throw(changed, std_form, mu, options, "completion after coordinate change"));
  };

  // The identity is tried first on its own: it often settles the question.
  DimensionReport out;
  out.diagram = run(0);
  if (out.diagram.vertices.size() == 1 && out.diagram.vertices[0].is_zero())
    throw InvalidArgument("the unit ideal has no dimension");
  out.k_best = leading_axis_count(out.diagram);
  out.matrix = matrices[0];
  out.trials_run = 1;
  if (out.k_best < n && trials > 1) {
    std::vector<std::future<Diagram>> jobs;
    for (std::size_t t = 1; t < trials; ++t) jobs.push_back(std::async(std::launch::async, run, t));
    for (std::size_t t = 1; t < trials; ++t) {
      Diagram d = jobs[t - 1].get();
      ++out.trials_run;
      std::size_t k = leading_axis_count(d);
      if (k > out.k_best) {
        out.k_best = k;
        out.diagram = std::move(d);
        out.matrix = matrices[t];
        out.trial = t;
      }
    }
  }
  out.dim_bound = n - out.k_best;
  return out;
}

ReductionReport reduction_exponent(const IdealExpander& expand, std::size_t n, std::size_t k, const Rational& mu,
                                   std::optional<unsigned> eta, const BasisOptions& options) {
  if (k < 1 || k > n) throw InvalidArgument("reduction needs 1 <= k <= n");
  auto std_form = LinearForm::standard(n);
  ReductionReport out;
  out.k = k;
  out.diagram = diagram_of(complete_or_throw(expand(std_form, mu), std_form, mu, options, "standard completion"));
  for (std::size_t j = 0; j < k; ++j) {
    auto it = std::find_if(out.diagram.vertices.begin(), out.diagram.vertices.end(),
                           [&](const Exponent& v) { return v[j] > 0 && v.total() == v[j]; });
    if (it == out.diagram.vertices.end())
      throw InvalidArgument("no vertex on coordinate axis " + std::to_string(j + 1) + " within the certified window");
    out.axis_degrees.push_back((*it)[j]);
    out.d += (*it)[j] - 1;
  }
  out.eta = eta.value_or(out.d + 3);
  if (out.eta < out.d + 1) throw InvalidArgument("jet level must be at least d + 1");

  IdealPresentation ideal = expand(std_form, Rational(out.eta));
  auto tail_degree = [k](const Exponent& b) {
    std::uint64_t t = 0;
    for (std::size_t j = k; j < b.size(); ++j) t += b[j];
    return t;
  };

  auto inclusion = std::async(std::launch::async, [&] {
    JetSpan span(n, out.eta);
    span.add_ideal(ideal);
    span.add_monomials([&](const Exponent& b) { return tail_degree(b) >= 1 && b.total() >= out.d + 1; });
    std::vector<Exponent> failing;
    for_each_exponent_within(LinearForm::standard(k), Rational(out.d + 1), [&](const Exponent& head) {
      if (head.total() != out.d + 1) return;
      Exponent b(n);
      for (std::size_t j = 0; j < k; ++j) b[j] = head[j];
      if (!span.contains_monomial(b)) failing.push_back(b);
    });
    return failing;
  });

  std::vector<std::future<bool>> identity_jobs;
  for (unsigned m = 1; m <= 2 && out.d + m <= out.eta; ++m) {
    identity_jobs.push_back(std::async(std::launch::async, [&, m] {
      JetSpan lhs(n, out.eta), rhs(n, out.eta);
      lhs.add_ideal(ideal);
      rhs.add_ideal(ideal);
      lhs.add_monomials([&](const Exponent& b) { return b.total() >= out.d + m; });
      rhs.add_monomials([&](const Exponent& b) { return tail_degree(b) >= m && b.total() >= out.d + m; });
      return same_span(lhs, rhs);
    }));
    out.identities.push_back({m, false});
  }
  out.failing_monomials = inclusion.get();
  out.inclusion_holds = out.failing_monomials.empty();
  for (std::size_t i = 0; i < identity_jobs.size(); ++i) out.identities[i].holds = identity_jobs[i].get();
  return out;
}

} // namespace locbasis

#include <doctest.h>

#include "locbasis/approx.hpp"
#include "locbasis/errors.hpp"
#include "locbasis/parse.hpp"

using namespace locbasis;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

IdealExpander expander_of(const std::string& text) {
  auto f = parse_ideal_file(text);
  return [f](const LinearForm& form, const Rational& prec) { return f.expand(form, prec); };
}

} // namespace

TEST_CASE("jets") {
  std::vector<std::string> x{"x"};
  auto L1 = LinearForm::standard(1);
  CHECK(jet(parse_series("x + x^3", x, L1, 5), 2) == parse_series("x", x, L1, 5));
  auto L = LinearForm::standard(3);
  auto f2 = parse_series("y^5 + y^2*z^4*exp(z)", xyz, L, 8);
  CHECK(jet(f2, 8) == parse_series("y^5 + y^2*z^4 + y^2*z^5 + 1/2*y^2*z^6", xyz, L, 8));
  CHECK(jet(f2, 8).is_exact());
  auto W = LinearForm::split(3, 1, 3);
  CHECK(jet(parse_series("x + z", xyz, W, 5), 3).size() == 2);
  CHECK_THROWS_AS(jet(Series(L, Precision::at(2)), 3), PrecisionShortfall);
}

TEST_CASE("jets are idempotent and additive") {
  auto L = LinearForm::standard(3);
  auto a = parse_series("x*exp(y) + z^2*geom(x)", xyz, L, 9);
  auto b = parse_series("y^3 - x*z*exp(z)", xyz, L, 9);
  CHECK(jet(jet(a, 6), 6) == jet(a, 6));
  CHECK(jet(a + b, 6) == jet(a, 6) + jet(b, 6));
  CHECK(jet(a, 6).initial_exponent() == a.initial_exponent());
}

TEST_CASE("perturbations must live above mu") {
  auto L = LinearForm::standard(1);
  std::vector<std::string> x{"x"};
  IdealPresentation I{{parse_series("x", x, L, 8)}, x};
  auto G = perturb({I, 5, L, {parse_series("x^6", x, L, 8)}});
  CHECK(G.gens[0] == parse_series("x + x^6", x, L, 8));
  CHECK(perturb({I, 5, L, {Series(L)}}).gens[0] == I.gens[0]);
  CHECK_THROWS_AS(perturb({I, 5, L, {parse_series("x^5", x, L, 8)}}), InvalidArgument);
}

TEST_CASE("counterexample runner at mu = 8, h = z") {
  auto r = cm_counterexample_runner(8, "z");
  REQUIRE(r.claims.size() == 4);
  for (const auto& c : r.claims) CHECK_MESSAGE(c.status == Claim::Status::Pass, c.name << ": " << c.detail);
  CHECK(r.s23 == parse_series("x^2*y^2*z^7", xyz, LinearForm::standard(3), 16).truncated(r.s23.precision().bound()));
  // The jets agree to order 8, so the tables agree there; the vertex
  // (2,2,7) shows up at degree 11.
  REQUIRE(r.first_hs_difference.has_value());
  CHECK(*r.first_hs_difference == 11);
}

TEST_CASE("counterexample runner at mu = 12, h = z^2 and degenerate h") {
  auto r = cm_counterexample_runner(12, "z^2");
  for (const auto& c : r.claims) CHECK_MESSAGE(c.status == Claim::Status::Pass, c.name << ": " << c.detail);
  auto d = cm_counterexample_runner(8, "0");
  CHECK(d.degenerate);
  CHECK(d.all_pass());
  CHECK(d.claims.back().status == Claim::Status::NotApplicable);
  CHECK_THROWS_AS(cm_counterexample_runner(7, "z"), InvalidArgument);
  CHECK_THROWS_AS(cm_counterexample_runner(8, "1 + z"), InvalidArgument);
}

TEST_CASE("stability experiment on (x^2, y^3)") {
  auto base = expander_of("vars: x y\ngen: x^2\ngen: y^3\n");
  auto pert = expander_of("vars: x y\ngen: x^2 + x^3*y^4\ngen: y^3 - x^7\n");
  auto r = ci_stability_experiment(base, pert, 2, 6);
  CHECK(r.complete_intersection_shape);
  CHECK(r.hs_equal);
  CHECK(r.axis_equal);
  CHECK(r.mu0 == 3);
  CHECK(r.mu_at_least_mu0);
}

TEST_CASE("stability experiment on a curve in 3-space") {
  auto base = expander_of("vars: x y z\ngen: x^2 - y*z\ngen: y^3 - z^4\n");
  auto pert = expander_of("vars: x y z\ngen: x^2 - y*z + z^9\ngen: y^3 - z^4 + x^5*z^4\n");
  auto r = ci_stability_experiment(base, pert, 3, 8);
  CHECK(r.base.dim.k_best == 2);
  CHECK(r.flat_equal);
  CHECK(r.hs_equal);
}

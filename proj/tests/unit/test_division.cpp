#include <doctest.h>

#include "locbasis/division.hpp"
#include "locbasis/errors.hpp"
#include "locbasis/parse.hpp"

#include <random>

using namespace locbasis;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

Series p3(const std::string& s, const Rational& prec = 20) {
  return parse_series(s, xyz, LinearForm::standard(3), prec);
}

} // namespace

TEST_CASE("region partition gives the first containing head") {
  RegionPartition one({Exponent{2, 0}});
  CHECK(one.region_of(Exponent{3, 1}) == 0u);
  RegionPartition two({Exponent{2, 0}, Exponent{0, 3}});
  CHECK_FALSE(two.region_of(Exponent{1, 1}).has_value());
  CHECK(two.region_of(Exponent{2, 3}) == 0u);
  CHECK(two.region_of(Exponent{1, 4}) == 1u);
}

TEST_CASE("exact monomial division") {
  auto L = LinearForm::standard(2);
  auto f = Series::monomial(L, Exponent{2, 1});
  auto r = hironaka_divide(f, {Series::monomial(L, Exponent{2, 0})}, 10);
  CHECK(r.exact);
  CHECK(r.quotients[0] == Series::monomial(L, Exponent{0, 1}));
  CHECK(r.remainder.is_exact_zero());
}

TEST_CASE("dividing x by x - x^2 gives the geometric series") {
  auto L = LinearForm::standard(1);
  Series f = Series::variable(L, 0);
  Series g(L);
  g.add_term(Exponent{1}, 1);
  g.add_term(Exponent{2}, -1);
  auto r = hironaka_divide(f, {g}, 5);
  // Quotient is certified to 5 - 1 = 4: 1 + x + ... + x^4.
  CHECK(r.quotients[0].precision() == Precision::at(4));
  for (unsigned k = 0; k <= 4; ++k) CHECK(r.quotients[0].coefficient(Exponent{k}) == 1);
  CHECK(r.quotients[0].size() == 5);
  CHECK(r.remainder.empty());
  CHECK(division_defect(f, {g}, r).empty());
}

TEST_CASE("S13 of the three-generator example divides with quotient -z^4 e^z") {
  Rational mu = 12;
  auto F1 = p3("x^8"), F2 = p3("y^5 + y^2*z^4*exp(z)"), F3 = p3("x^2*y^3 + x^2*z^4*exp(z)");
  auto s13 = F1.shifted(Exponent{0, 3, 0}) - F3.shifted(Exponent{6, 0, 0});
  auto r = hironaka_divide(s13, {F1, F2, F3}, mu);
  CHECK(r.remainder.empty());
  CHECK(r.quotients[1].empty());
  CHECK(r.quotients[2].empty());
  auto expected = p3("-z^4*exp(z)").truncated(mu - 8);
  CHECK(r.quotients[0] == expected);
}

TEST_CASE("division preconditions") {
  auto L = LinearForm::standard(2);
  Series f(L, Precision::at(3));
  f.add_term(Exponent{1, 0}, 1);
  Series g = Series::variable(L, 0);
  CHECK_THROWS_AS(hironaka_divide(f, {g}, 5), PrecisionShortfall);
  CHECK_THROWS_AS(hironaka_divide(Series(L), {Series(L, Precision::at(9))}, 5), ZeroUpToPrecision);
  CHECK_THROWS_AS(hironaka_divide(Series(L), {}, 5), InvalidArgument);
}

TEST_CASE("division invariants on random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), count(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto L = trial % 2 ? LinearForm::standard(n) : LinearForm::split(n, 1, 2);
    Rational mu = 4 + trial % 5;
    auto random_poly = [&](int terms, bool nonconstant) {
      Series s(L, Precision::at(mu + 3));
      for (int t = 0; t < terms; ++t) {
        Exponent e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<Exponent::value_type>(deg(rng));
        if (nonconstant && e.is_zero()) e[0] = 1;
        s.add_term(e, coef(rng));
      }
      return s;
    };
    Series f = random_poly(6, false);
    std::vector<Series> g;
    for (int i = 0, c = count(rng); i < c; ++i) {
      Series gi = random_poly(3, true);
      if (gi.empty()) gi.add_term(Exponent::unit(n, 0), 1);
      g.push_back(gi);
    }
    auto r = hironaka_divide(f, g, mu);
    CHECK(division_defect(f, g, r).empty());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (const auto& [e, c] : r.quotients[i].terms()) CHECK(r.regions.region_of(e + r.regions.heads()[i]) == i);
    for (const auto& [e, c] : r.remainder.terms()) CHECK_FALSE(r.regions.region_of(e).has_value());
    auto shuffled = hironaka_divide(f, g, mu, DivisionOptions{static_cast<std::uint64_t>(trial)});
    CHECK(shuffled.quotients == r.quotients);
    CHECK(shuffled.remainder == r.remainder);
  }
}

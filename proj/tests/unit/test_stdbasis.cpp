#include <doctest.h>

#include "locbasis/diagram.hpp"
#include "locbasis/parse.hpp"
#include "locbasis/stdbasis.hpp"

using namespace locbasis;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

IdealPresentation ideal3(std::initializer_list<const char*> gens, const Rational& prec, const LinearForm& form) {
  IdealPresentation out{{}, xyz};
  for (const char* g : gens) out.gens.push_back(parse_series(g, xyz, form, prec));
  return out;
}

IdealPresentation example_ideal(const Rational& prec, const char* delta = "0") {
  std::string g2 = std::string("y^5 + y^2*z^4*exp(z) + ") + delta;
  IdealPresentation out{{}, xyz};
  auto L = LinearForm::standard(3);
  out.gens = {parse_series("x^8", xyz, L, prec), parse_series(g2, xyz, L, prec),
              parse_series("x^2*y^3 + x^2*z^4*exp(z)", xyz, L, prec)};
  return out;
}

} // namespace

TEST_CASE("s-series of monomials vanishes") {
  auto L = LinearForm::standard(2);
  auto s = s_series(Series::monomial(L, Exponent{2, 0}), Series::monomial(L, Exponent{0, 3}));
  CHECK(s.is_exact_zero());
}

TEST_CASE("S23 of the three-generator example is exactly zero") {
  auto I = example_ideal(16);
  auto s = s_series(I.gens[1], I.gens[2]);
  CHECK(s.empty());
}

TEST_CASE("the exact zero has a standard representation") {
  auto L = LinearForm::standard(2);
  CHECK(has_standard_representation(Series(L), {Series::variable(L, 0)}, 4).exists);
}

TEST_CASE("the three-generator example is a standard basis") {
  for (int mu : {8, 12}) {
    auto I = example_ideal(2 * mu);
    std::vector<Series> s;
    for (const auto& g : I.gens) s.push_back(g.truncated(mu));
    auto b = becker_check(s, mu);
    CHECK(b.verified);
    b = becker_check(s, mu, BasisOptions{false});
    CHECK(b.verified);
  }
}

TEST_CASE("the perturbed example fails on the pair (2,3) and completion adjoins x^2 y^2 z^7") {
  auto I = example_ideal(16, "y^2*z^4*z^2*z");
  std::vector<Series> s;
  for (const auto& g : I.gens) s.push_back(g.truncated(16));
  auto b = becker_check(s, 16);
  CHECK_FALSE(b.verified);
  bool pair23_failed = false;
  for (const auto& pc : b.pairs)
    if (pc.i == 1 && pc.j == 2) pair23_failed = pc.outcome == PairCheck::Outcome::Failed;
  CHECK(pair23_failed);

  auto c = complete(I, LinearForm::standard(3), 16);
  CHECK(c.verified);
  auto heads = c.heads();
  CHECK(std::find(heads.begin(), heads.end(), Exponent{2, 2, 7}) != heads.end());
}

TEST_CASE("completion of (y - x^2, y) yields heads y and x^2") {
  auto L = LinearForm::standard(2);
  std::vector<std::string> xy{"x", "y"};
  IdealPresentation I{{parse_series("y - x^2", xy, L, 6), parse_series("y", xy, L, 6)}, xy};
  auto c = complete(I, L, 6);
  CHECK(c.verified);
  auto d = diagram_of(c);
  CHECK(d.vertices == std::vector<Exponent>{Exponent{0, 1}, Exponent{2, 0}});
  CHECK(c.provenance.back().kind == Provenance::Kind::ReducedInput);
}

TEST_CASE("monomial ideals are already complete") {
  auto L = LinearForm::standard(2);
  std::vector<std::string> xy{"x", "y"};
  IdealPresentation I{{parse_series("x^2", xy, L, 8), parse_series("y^3", xy, L, 8)}, xy};
  auto c = complete(I, L, 8);
  CHECK(c.gens.size() == 2);
  CHECK(c.gens[0] == I.gens[0].truncated(8));
}

TEST_CASE("completion is closed under becker_check") {
  auto L = LinearForm::standard(3);
  auto I = ideal3({"x^2 - y*z", "x*y - z^3", "y^2 + x*z^2"}, 12, L);
  auto c = complete(I, L, 9);
  REQUIRE(c.verified);
  CHECK(becker_check(c.gens, 9, BasisOptions{false}).verified);
  for (const auto& g : c.gens) CHECK(hironaka_divide(g, c.gens, 9).remainder.empty());
  // No head lies in the cone of an earlier one.
  auto heads = c.heads();
  for (std::size_t j = 0; j < heads.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) CHECK_FALSE(heads[i].divides(heads[j]));
}

TEST_CASE("generators vanishing in the window are dropped") {
  auto L = LinearForm::standard(2);
  std::vector<std::string> xy{"x", "y"};
  IdealPresentation I{{parse_series("x^5", xy, L, 8), parse_series("y^2", xy, L, 8)}, xy};
  auto c = complete(I, L, 4);
  CHECK(c.gens.size() == 1);
  CHECK(c.dropped_inputs == std::vector<std::size_t>{0});
}

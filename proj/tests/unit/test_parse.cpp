#include <doctest.h>

#include "locbasis/errors.hpp"
#include "locbasis/parse.hpp"

#include <random>

using namespace locbasis;

TEST_CASE("parsing the second generator of the example") {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto s = parse_series("y^5 + y^2*z^4*exp(z)", xyz, LinearForm::standard(3), 8);
  CHECK(s.precision() == Precision::at(14));
  CHECK(s.coefficient(Exponent{0, 2, 6}) == Rational(1, 2));
  CHECK(s.coefficient(Exponent{0, 2, 12}) == Rational(1, 40320));
  CHECK(s.initial_exponent() == Exponent{0, 5, 0});
}

TEST_CASE("parser basics") {
  std::vector<std::string> xy{"x", "y"};
  auto L = LinearForm::standard(2);
  CHECK(parse_series("0", xy, L, 5).is_exact_zero());
  CHECK(parse_series("-x^2 + 3/4*y", xy, L, 5).coefficient(Exponent{0, 1}) == Rational(3, 4));
  CHECK(parse_series("(x+y)^2 - x^2 - y^2", xy, L, 5) == parse_series("2*x*y", xy, L, 5));
  CHECK(parse_series("geom(x)", xy, L, 3).size() == 4);
  CHECK_THROWS_AS(parse_series("exp(1+x)", xy, L, 5), InvalidArgument);
  CHECK_THROWS_AS(parse_series("x +", xy, L, 5), ParseError);
  CHECK_THROWS_AS(parse_series("w", xy, L, 5), ParseError);
  CHECK_THROWS_AS(parse_series("x^y", xy, L, 5), ParseError);
  try {
    parse_series("x + * y", xy, L, 5);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print and reparse round trip") {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto L = LinearForm::standard(3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Series s(L);
    for (int t = 0; t < 5; ++t) {
      Exponent e(3);
      for (std::size_t j = 0; j < 3; ++j) e[j] = static_cast<Exponent::value_type>(deg(rng));
      s.add_term(e, Rational(num(rng), den(rng)));
    }
    CHECK(parse_series(s.to_string(xyz), xyz, L, 10) == s);
  }
}

TEST_CASE("ideal files") {
  auto f = parse_ideal_file("# comment\nvars: x y z\nprec: 9\norder: split:k=2,l=9\ngen: x^8\n\ngen: y^5\n");
  CHECK(f.names.size() == 3);
  CHECK(f.prec == 9);
  CHECK(f.form().weights()[2] == 9);
  CHECK(f.expand().gens.size() == 2);
  CHECK_THROWS_AS(parse_ideal_file("gen: x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\ngen: x +\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("vars: x\nfoo: 1\ngen: x\n"), ParseError);
}

TEST_CASE("jets under a weighted form") {
  std::vector<std::string> xz{"x", "z"};
  auto W = LinearForm::split(2, 1, 3);
  auto s = parse_series("x + z + x^4", xz, W, 10).truncated(3);
  CHECK(s.size() == 2);
}

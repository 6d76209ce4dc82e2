#include <doctest.h>

#include "locbasis/errors.hpp"
#include "locbasis/json_io.hpp"
#include "locbasis/parse.hpp"

using namespace locbasis;

TEST_CASE("series survive a JSON round trip") {
  std::vector<std::string> xyz{"x", "y", "z"};
  auto L = LinearForm::standard(3);
  auto exact = parse_series("x^2 - 3/4*y*z + 1", xyz, L, 10);
  auto cut = parse_series("y^5 + y^2*z^4*exp(z)", xyz, L, 9);
  auto weighted = parse_series("x + z^2", xyz, LinearForm::split(3, 2, 7), 20);
  for (const auto& s : {exact, cut, weighted}) {
    Json j = series_to_json(s, xyz);
    CHECK(series_from_json(Json::parse(j.dump())) == s);
  }
  CHECK(series_to_json(exact, xyz)["prec"] == "exact");
  CHECK(series_to_json(cut, xyz)["prec"] == "15"); // exp(z) to 9, shifted by |(0,2,4)|
  CHECK_THROWS_AS(series_from_json(Json{{"dim", 1}}), InvalidArgument);
}

TEST_CASE("towers survive a JSON round trip") {
  std::vector<std::string> xy{"x", "y"};
  auto t = build_tower({parse_series("y^2 - x^3", xy, LinearForm::standard(2), 10)}, 10, 0, xy);
  Json j = tower_to_json(t);
  Tower back = tower_from_json(Json::parse(j.dump()));
  CHECK(back.levels.size() == 3);
  CHECK(back.levels[2].F == t.levels[2].F);
  CHECK(back.levels[1].j == 3);
  CHECK(back.levels[0].one);
  CHECK(validate_tower(back).all_pass());
  CHECK(tower_to_json(back).dump() == j.dump());
  CHECK_THROWS_AS(tower_from_json(Json{{"kind", "diagram"}}), InvalidArgument);
}

#include "locbasis/json_io.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>

namespace locbasis {

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Precision& p) { return p.to_string(); }

Json to_json(const Exponent& e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e[i]);
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_json(q));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const Diagram& d) {
  Json vertices = Json::array();
  for (const auto& v : d.vertices) vertices.push_back(to_json(v));
  return Json{{"form", d.form.to_string()}, {"certified_to", to_json(d.certified_to)}, {"vertices", vertices}};
}

Json series_to_json(const Series& s, const std::vector<std::string>& names) {
  std::vector<std::pair<Exponent, Rational>> terms(s.terms().begin(), s.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return s.form().compare(a.first, b.first) < 0; });
  Json list = Json::array();
  for (const auto& [e, c] : terms) list.push_back(Json::array({to_json(e), to_json(c)}));
  std::string text = names.size() == s.dim() ? s.to_string(names) : s.to_string();
  return Json{{"dim", s.dim()},
              {"form", s.form().to_string()},
              {"prec", to_json(s.precision())},
              {"text", text},
              {"terms", list}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Matrix matrix_from_json(const Json& j) {
  Matrix m;
  if (!j.is_array()) throw InvalidArgument("expected a matrix");
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& q : row) r.push_back(rational_from_json(q));
    m.push_back(std::move(r));
  }
  return m;
}

Series series_from_json(const Json& j) {
  try {
    auto n = j.at("dim").get<std::size_t>();
    LinearForm form = parse_form(j.at("form").get<std::string>(), n);
    std::string prec = j.at("prec").get<std::string>();
    Series s(form, prec == "exact" ? Precision::exact() : Precision::at(parse_rational(prec)));
    for (const auto& term : j.at("terms")) {
      auto exps = term.at(0).get<std::vector<Exponent::value_type>>();
      if (exps.size() != n) throw InvalidArgument("term exponent has the wrong length");
      s.add_term(Exponent(std::move(exps)), rational_from_json(term.at(1)));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed series: ") + e.what());
  }
}

namespace {

std::string clipped(std::string text, std::size_t width = 240) {
  if (text.size() > width) text = text.substr(0, width) + " ...";
  return text;
}

std::vector<std::string> first_names(const std::vector<std::string>& names, std::size_t k) {
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(std::min(k, names.size()))};
}

} // namespace

Json tower_to_json(const Tower& t) {
  Json gens = Json::array(), sheets = Json::array(), levels = Json::array();
  for (const auto& g : t.generators) gens.push_back(series_to_json(g, t.names));
  for (const auto& s : t.sheets) sheets.push_back(series_to_json(s, t.names));
  for (std::size_t i = t.levels.size(); i-- > 0;) {
    const TowerLevel& level = t.levels[i];
    Json entry{{"level", i}, {"vars", level.vars}, {"one", level.one}};
    if (!level.one) {
      auto names = first_names(t.names, i);
      auto lower = first_names(t.names, i - 1);
      Json coeffs = Json::array();
      for (const auto& a : coefficients_in_last(level.F, level.degree)) coeffs.push_back(clipped(a.to_string(lower)));
      Json certs = Json::array();
      for (const auto& c : level.certificates)
        certs.push_back(Json{{"j", c.j}, {"vanishes", c.vanishes}, {"precision", to_json(c.precision)}});
      entry["degree"] = level.degree;
      entry["j"] = level.j;
      entry["unit_constant"] = to_json(level.unit.constant_term());
      entry["coefficients"] = coeffs;
      entry["certificates"] = certs;
      entry["F"] = series_to_json(level.F, names);
      entry["unit"] = series_to_json(level.unit, names);
      entry["discriminant"] = series_to_json(level.discriminant, lower);
    }
    levels.push_back(std::move(entry));
  }
  return Json{{"kind", "tower"},
              {"n", t.n},
              {"mu", to_json(t.mu)},
              {"seed", t.seed},
              {"names", t.names},
              {"undecided", t.undecided},
              {"change", to_json(t.change)},
              {"generators", gens},
              {"sheets", sheets},
              {"levels", levels}};
}

Tower tower_from_json(const Json& j) {
  try {
    if (j.value("kind", "") != "tower") throw InvalidArgument("document is not a tower");
    Tower t;
    t.n = j.at("n").get<std::size_t>();
    t.mu = rational_from_json(j.at("mu"));
    t.seed = j.at("seed").get<std::uint64_t>();
    t.names = j.at("names").get<std::vector<std::string>>();
    t.undecided = j.at("undecided").get<bool>();
    t.change = matrix_from_json(j.at("change"));
    for (const auto& g : j.at("generators")) t.generators.push_back(series_from_json(g));
    for (const auto& s : j.at("sheets")) t.sheets.push_back(series_from_json(s));
    const auto& levels = j.at("levels");
    if (levels.size() != t.n + 1) throw InvalidArgument("tower needs n + 1 levels");
    t.levels.resize(t.n + 1);
    for (const auto& entry : levels) {
      auto i = entry.at("level").get<std::size_t>();
      if (i > t.n) throw InvalidArgument("level index out of range");
      TowerLevel& level = t.levels[i];
      level.vars = entry.at("vars").get<std::size_t>();
      level.one = entry.at("one").get<bool>();
      if (level.one) continue;
      level.degree = entry.at("degree").get<unsigned>();
      level.j = entry.at("j").get<unsigned>();
      for (const auto& c : entry.at("certificates")) {
        std::string p = c.at("precision").get<std::string>();
        level.certificates.push_back({c.at("j").get<unsigned>(), c.at("vanishes").get<bool>(),
                                      p == "exact" ? Precision::exact() : Precision::at(parse_rational(p))});
      }
      level.F = series_from_json(entry.at("F"));
      level.unit = series_from_json(entry.at("unit"));
      level.discriminant = series_from_json(entry.at("discriminant"));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed tower: ") + e.what());
  }
}

} // namespace locbasis

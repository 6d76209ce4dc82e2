#pragma once

#include "locbasis/diagram.hpp"
#include "locbasis/tower.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace locbasis {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q); // "a/b" string, so no precision is lost
Json to_json(const Precision& p); // "exact" or the bound
Json to_json(const Exponent& e);
Json to_json(const Matrix& m);
Json to_json(const Diagram& d);

/// {"dim", "form", "prec", "text", "terms": [[exponent, "coeff"], ...]} with
/// terms in increasing monomial order. Only dim, form, prec and terms are read
/// back; text is for people.
Json series_to_json(const Series& s, const std::vector<std::string>& names);
Series series_from_json(const Json& j);

Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);

Json tower_to_json(const Tower& t);
/// Throws InvalidArgument on a malformed document.
Tower tower_from_json(const Json& j);

} // namespace locbasis

#include "locbasis/linear_form.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace locbasis {

namespace {

std::int64_t to_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw InvalidArgument(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

} // namespace

LinearForm::LinearForm(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Integer den = 1;
  for (auto& w : weights_) {
    w.canonicalize();
    if (sgn(w) <= 0) throw InvalidArgument("linear form weights must be strictly positive");
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  }
  scale_ = to_int64(den, "weight denominator");
  scaled_.reserve(weights_.size());
  for (const auto& w : weights_) {
    Rational s = w * den;
    scaled_.push_back(to_int64(s.get_num(), "scaled weight"));
  }
}

LinearForm LinearForm::standard(std::size_t n) { return LinearForm(std::vector<Rational>(n, Rational(1))); }

LinearForm LinearForm::split(std::size_t n, std::size_t k, std::int64_t l) {
  if (k < 1 || k > n) throw InvalidArgument("split index must satisfy 1 <= k <= n");
  if (l < 1) throw InvalidArgument("split weight must be >= 1");
  std::vector<Rational> w(n, Rational(1));
  for (std::size_t j = k; j < n; ++j) w[j] = Rational(static_cast<long>(l));
  return LinearForm(std::move(w));
}

bool LinearForm::is_standard() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

void LinearForm::check_dim(const Exponent& b) const {
  if (b.size() != weights_.size())
    throw DimensionMismatch("exponent of length " + std::to_string(b.size()) + " against form of dimension " +
                            std::to_string(weights_.size()));
}

Rational LinearForm::value(const Exponent& b) const {
  Rational v(static_cast<long>(scaled_value(b)), static_cast<unsigned long>(scale_));
  v.canonicalize();
  return v;
}

std::int64_t LinearForm::scaled_value(const Exponent& b) const {
  check_dim(b);
  std::int64_t v = 0;
  for (std::size_t j = 0; j < scaled_.size(); ++j) v += scaled_[j] * static_cast<std::int64_t>(b[j]);
  return v;
}

std::int64_t LinearForm::scaled_bound(const Rational& p) const {
  Integer f = floor(p * Rational(static_cast<long>(scale_)));
  if (f > Integer(std::numeric_limits<long>::max() / 4)) return std::numeric_limits<std::int64_t>::max() / 4;
  if (f < Integer(std::numeric_limits<long>::min() / 4)) return std::numeric_limits<std::int64_t>::min() / 4;
  return f.get_si();
}

bool LinearForm::within(const Exponent& b, const Rational& p) const { return scaled_value(b) <= scaled_bound(p); }

std::strong_ordering LinearForm::compare(const Exponent& a, const Exponent& b) const {
  check_dim(a);
  check_dim(b);
  if (auto c = scaled_value(a) <=> scaled_value(b); c != 0) return c;
  for (std::size_t j = a.size(); j-- > 0;)
    if (auto c = a[j] <=> b[j]; c != 0) return c;
  return std::strong_ordering::equal;
}

LinearForm LinearForm::restricted(std::size_t k) const {
  if (k > dim()) throw DimensionMismatch("restriction beyond form dimension");
  return LinearForm(std::vector<Rational>(weights_.begin(), weights_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Rational LinearForm::min_weight() const {
  if (weights_.empty()) return Rational(1);
  return *std::min_element(weights_.begin(), weights_.end());
}

Rational LinearForm::max_weight() const {
  if (weights_.empty()) return Rational(1);
  return *std::max_element(weights_.begin(), weights_.end());
}

std::string LinearForm::to_string() const {
  if (is_standard()) return "std";
  std::string s = "w:";
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (j) s += ",";
    s += weights_[j].get_str();
  }
  return s;
}

LinearForm parse_form(std::string_view spec, std::size_t n) {
  if (spec == "std") return LinearForm::standard(n);
  if (spec.substr(0, 2) == "w:") {
    std::vector<Rational> w;
    std::string_view rest = spec.substr(2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      w.push_back(parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (w.size() != n)
      throw InvalidArgument("form '" + std::string(spec) + "' has " + std::to_string(w.size()) + " weights, expected " +
                            std::to_string(n));
    return LinearForm(std::move(w));
  }
  if (spec.substr(0, 6) == "split:") {
    std::string_view rest = spec.substr(6);
    long k = -1, l = -1;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InvalidArgument("malformed split form '" + std::string(spec) + "'");
      Rational v = parse_rational(item.substr(eq + 1));
      if (!is_integer(v)) throw InvalidArgument("split parameters must be integers");
      if (item.substr(0, eq) == "k")
        k = v.get_num().get_si();
      else if (item.substr(0, eq) == "l")
        l = v.get_num().get_si();
      else
        throw InvalidArgument("unknown split parameter in '" + std::string(spec) + "'");
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (k < 0 || l < 0) throw InvalidArgument("split form needs both k and l");
    return LinearForm::split(n, static_cast<std::size_t>(k), l);
  }
  throw InvalidArgument("unknown order specification '" + std::string(spec) + "'");
}

Rational precision_factor(const LinearForm& from, const LinearForm& to) {
  if (from.dim() != to.dim()) throw DimensionMismatch("forms of different dimension");
  if (from.dim() == 0) return Rational(1);
  Rational c = to.weights()[0] / from.weights()[0];
  for (std::size_t j = 1; j < from.dim(); ++j) c = std::min(c, Rational(to.weights()[j] / from.weights()[j]));
  return c;
}

} // namespace locbasis

#include "locbasis/division.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace locbasis {

std::optional<std::size_t> RegionPartition::region_of(const Exponent& b) const {
  for (std::size_t i = 0; i < heads_.size(); ++i)
    if (heads_[i].divides(b)) return i;
  return std::nullopt;
}

namespace {

struct Divisor {
  Exponent head;
  Rational inverse_lc;
  // Terms other than the head, with their scaled L-values, in increasing order.
  std::vector<std::pair<std::int64_t, const std::pair<const Exponent, Rational>*>> tail;
};

} // namespace

DivisionResult hironaka_divide(const Series& f, const std::vector<Series>& g, const Rational& mu,
                               const DivisionOptions& options) {
  const LinearForm& form = f.form();
  if (g.empty()) throw InvalidArgument("division needs at least one divisor");
  if (!f.precision().reaches(mu))
    throw PrecisionShortfall("dividend certified to " + f.precision().to_string() + " < " + mu.get_str());

  std::vector<Divisor> divisors;
  std::vector<Exponent> heads;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Series& gi = g[i];
    if (gi.dim() != f.dim()) throw DimensionMismatch("divisor dimension differs from dividend");
    if (!(gi.form() == form)) throw InvalidArgument("divisor carries a different linear form");
    if (!gi.precision().reaches(mu))
      throw PrecisionShortfall("divisor " + std::to_string(i + 1) + " certified to " + gi.precision().to_string() +
                               " < " + mu.get_str());
    if (gi.empty()) throw ZeroUpToPrecision("divisor " + std::to_string(i + 1) + " is zero up to its precision");
    Divisor d;
    d.head = gi.initial_exponent();
    d.inverse_lc = 1 / gi.coefficient(d.head);
    for (const auto& t : gi.terms())
      if (t.first != d.head) d.tail.emplace_back(form.scaled_value(t.first), &t);
    std::sort(d.tail.begin(), d.tail.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    heads.push_back(d.head);
    divisors.push_back(std::move(d));
  }

  DivisionResult out;
  out.mu = mu;
  out.regions = RegionPartition(heads);
  out.remainder = Series(form, Precision::at(mu));
  for (const auto& d : divisors) out.quotients.emplace_back(form, Precision::at(mu - form.value(d.head)));

  const std::int64_t bound = form.scaled_bound(mu);
  std::map<Exponent, Rational, LinearForm::Less> running{LinearForm::Less{&form}};
  for (const auto& [e, c] : f.terms())
    if (form.scaled_value(e) <= bound) running.emplace(e, c);

  bool cut = false;
  for (const auto& [e, c] : f.terms())
    if (form.scaled_value(e) > bound) cut = true;

  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  Rational q, delta;
  while (!running.empty()) {
    auto it = running.begin();
    if (options.shuffle_seed) {
      std::int64_t level = form.scaled_value(it->first);
      std::size_t ties = 0;
      for (auto jt = it; jt != running.end() && form.scaled_value(jt->first) == level; ++jt) ++ties;
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng));
    }
    Exponent b = it->first;
    Rational c = std::move(it->second);
    running.erase(it);
    ++out.steps;

    auto region = out.regions.region_of(b);
    if (!region) {
      out.remainder.add_term(b, c);
      continue;
    }
    const Divisor& d = divisors[*region];
    Exponent shift = b - d.head;
    q = c * d.inverse_lc;
    out.quotients[*region].add_term(shift, q);
    std::int64_t ls = form.scaled_value(shift);
    for (const auto& [lv, term] : d.tail) {
      if (lv + ls > bound) {
        cut = true;
        break;
      }
      mpq_mul(delta.get_mpq_t(), q.get_mpq_t(), term->second.get_mpq_t());
      auto [jt, inserted] = running.try_emplace(term->first + shift);
      jt->second -= delta;
      if (sgn(jt->second) == 0) running.erase(jt);
    }
  }
  out.exact = !cut && f.is_exact() && std::all_of(g.begin(), g.end(), [](const Series& s) { return s.is_exact(); });
  if (out.exact) {
    for (auto& q : out.quotients) q = q.as_exact();
    out.remainder = out.remainder.as_exact();
  }
  return out;
}

Series division_defect(const Series& f, const std::vector<Series>& g, const DivisionResult& result) {
  Series acc = result.remainder - f;
  for (std::size_t i = 0; i < g.size(); ++i) acc += result.quotients[i] * g[i];
  return acc.truncated(result.mu);
}

} // namespace locbasis

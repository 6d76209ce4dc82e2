#include "locbasis/diagram.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>

namespace locbasis {

bool Diagram::contains(const Exponent& b) const {
  return std::any_of(vertices.begin(), vertices.end(), [&](const Exponent& v) { return v.divides(b); });
}

Diagram minimal_diagram(const std::vector<Exponent>& heads, const LinearForm& form, const Rational& certified_to) {
  Diagram d;
  d.n = form.dim();
  d.form = form;
  d.certified_to = certified_to;
  std::vector<Exponent> sorted = heads;
  std::sort(sorted.begin(), sorted.end(), LinearForm::Less{&form});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A divisor of h precedes h in any monomial order, so one pass suffices.
  for (const auto& h : sorted)
    if (!d.contains(h)) d.vertices.push_back(h);
  return d;
}

Diagram diagram_of(const CertifiedBasis& basis) {
  if (!basis.verified) throw InvalidArgument("diagram of an unverified basis");
  return minimal_diagram(basis.heads(), basis.form, basis.mu);
}

void for_each_exponent_within(const LinearForm& form, const Rational& bound,
                              const std::function<void(const Exponent&)>& visit) {
  const std::size_t n = form.dim();
  const std::int64_t cap = form.scaled_bound(bound);
  if (cap < 0) return;
  Exponent e(n);
  std::vector<std::int64_t> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = form.scaled_value(Exponent::unit(n, j));
  // Odometer over coordinates with a running L-value.
  std::int64_t used = 0;
  while (true) {
    visit(e);
    std::size_t j = 0;
    while (j < n) {
      if (used + w[j] <= cap) {
        ++e[j];
        used += w[j];
        break;
      }
      used -= w[j] * e[j];
      e[j] = 0;
      ++j;
    }
    if (j == n) return;
  }
}

std::uint64_t complement_count(const Diagram& d, const Rational& eta) {
  if (eta > d.certified_to)
    throw PrecisionShortfall("level " + eta.get_str() + " lies beyond the certified window " +
                             d.certified_to.get_str());
  std::uint64_t count = 0;
  for_each_exponent_within(d.form, eta, [&](const Exponent& b) {
    if (!d.contains(b)) ++count;
  });
  return count;
}

std::vector<std::uint64_t> hilbert_samuel(const CertifiedBasis& basis, unsigned eta_max) {
  if (!basis.form.is_standard()) throw InvalidArgument("Hilbert-Samuel counts need the standard form");
  Diagram d = diagram_of(basis);
  if (Rational(eta_max) > d.certified_to)
    throw PrecisionShortfall("eta " + std::to_string(eta_max) + " exceeds the certification " +
                             d.certified_to.get_str());
  // One enumeration, bucketed by degree.
  std::vector<std::uint64_t> per_level(eta_max + 1, 0);
  for_each_exponent_within(d.form, Rational(eta_max), [&](const Exponent& b) {
    if (!d.contains(b)) ++per_level[b.total()];
  });
  for (unsigned i = 1; i <= eta_max; ++i) per_level[i] += per_level[i - 1];
  return per_level;
}

EvaluatedIdeal evaluated_ideal(const IdealPresentation& ideal, std::size_t k) {
  ideal.validate();
  if (k < 1 || k >= ideal.dim()) throw InvalidArgument("evaluation needs 1 <= k < n");
  EvaluatedIdeal out;
  out.ideal.names.assign(ideal.names.begin(), ideal.names.begin() + static_cast<std::ptrdiff_t>(k));
  for (const auto& g : ideal.gens) {
    Series e = g.evaluate_tail_zero(k);
    if (!e.empty()) out.ideal.gens.push_back(std::move(e));
  }
  out.trivial = out.ideal.gens.empty();
  return out;
}

ProductCheck product_structure_check(const Diagram& d, std::size_t k) {
  if (k < 1 || k > d.n) throw InvalidArgument("split index must satisfy 1 <= k <= n");
  ProductCheck out;
  out.product = true;
  for (const auto& v : d.vertices) {
    if (!v.tail_zero(k)) out.product = false;
    out.base.push_back(v.head(k));
  }
  return out;
}

} // namespace locbasis

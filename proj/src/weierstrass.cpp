#include "locbasis/weierstrass.hpp"

#include "locbasis/division.hpp"
#include "locbasis/errors.hpp"

namespace locbasis {

unsigned regularity_order(const Series& f, std::size_t i) {
  if (i >= f.dim()) throw InvalidArgument("distinguished variable out of range");
  if (!f.form().is_standard()) throw InvalidArgument("regularity is read under the standard form");
  std::optional<unsigned> best;
  for (const auto& [e, c] : f.terms())
    if (e.total() == e[i] && (!best || e[i] < *best)) best = e[i];
  if (!best) throw NotRegular("no pure power of variable " + std::to_string(i + 1) + " inside the window");
  return *best;
}

Preparation weierstrass_prepare(const Series& f, std::size_t i, const Rational& mu) {
  const std::size_t n = f.dim();
  const unsigned p = regularity_order(f, i);
  if (p == 0) throw NotRegular("f is a unit; there is nothing to prepare");

  // Weight 1 on x_i and w on the rest, with j + w |g| > p for every term
  // x^g x_i^j (g != 0, j < p), so x_i^p becomes the head of f. Unknown terms
  // have total degree above the precision, which is at least p.
  Rational w = 1;
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t rest = e.total() - e[i];
    if (rest == 0 || e[i] >= p) continue;
    Rational ratio(static_cast<long>(p - e[i]), static_cast<unsigned long>(rest));
    ratio.canonicalize();
    if (ratio >= w) w = ratio + Rational(1, 2);
  }
  std::vector<Rational> weights(n, w);
  weights[i] = 1;
  LinearForm weighted(weights);

  Series fw = f.rebased(weighted);
  // Std degree <= mu needs L-value <= w mu; p more leaves room for u.
  Rational q = w * mu + p;
  if (!fw.is_exact()) q = std::min(q, fw.precision().bound());
  if (fw.initial_exponent() != Exponent::unit(n, i, p)) throw Error("weighted form failed to isolate x_i^p");

  Preparation out;
  out.degree = p;
  out.internal_form = weighted;
  Series xp = Series::monomial(weighted, Exponent::unit(n, i, p));
  auto first = hironaka_divide(xp, {fw}, q);
  Series Pw = xp - first.remainder;
  auto second = hironaka_divide(fw, {Pw}, q);
  if (!second.remainder.empty()) throw Error("f is not divisible by its distinguished polynomial");
  Series uw = second.quotients[0];

  auto std_form = LinearForm::standard(n);
  Series P = Pw.rebased(std_form), u = uw.rebased(std_form);
  if (!P.is_exact()) P = P.truncated(std::min(mu, P.precision().bound()));
  if (!u.is_exact()) u = u.truncated(std::min(mu, u.precision().bound()));

  Series defect = u * P - f;
  if (!defect.truncated(min(defect.precision(), Precision::at(mu)).bound()).empty())
    throw Error("Weierstrass identity failed");
  if (u.constant_term() == 0) throw Error("preparation produced a non-unit");
  out.P = std::move(P);
  out.u = std::move(u);
  return out;
}

} // namespace locbasis

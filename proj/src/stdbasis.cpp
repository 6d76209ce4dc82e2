#include "locbasis/stdbasis.hpp"

#include "locbasis/errors.hpp"

#include <set>
#include <tuple>

namespace locbasis {

Series s_series(const Series& f, const Series& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("s-series of series with different dimensions");
  Exponent bf = f.initial_exponent(), bg = g.initial_exponent();
  Exponent c = lcm(bf, bg);
  Series s = f.shifted(c - bf).scaled(g.coefficient(bg)) - g.shifted(c - bg).scaled(f.coefficient(bf));
  if (s.coefficient(c) != 0) throw Error("s-series head failed to cancel");
  return s;
}

Representation has_standard_representation(const Series& f, const std::vector<Series>& basis, const Rational& mu) {
  Representation rep;
  if (f.is_exact_zero()) {
    rep.exists = true;
    return rep;
  }
  rep.division = hironaka_divide(f, basis, mu);
  rep.exists = rep.division.remainder.empty();
  return rep;
}

std::string to_string(PairCheck::Outcome outcome) {
  switch (outcome) {
  case PairCheck::Outcome::Reduced: return "reduced";
  case PairCheck::Outcome::Coprime: return "coprime-heads";
  case PairCheck::Outcome::BeyondWindow: return "beyond-window";
  case PairCheck::Outcome::Failed: return "failed";
  case PairCheck::Outcome::Adjoined: return "adjoined";
  }
  return "?";
}

std::string Provenance::to_string() const {
  switch (kind) {
  case Kind::Input: return "input " + std::to_string(first + 1);
  case Kind::ReducedInput: return "reduced input " + std::to_string(first + 1);
  case Kind::SSeries: return "S(" + std::to_string(first + 1) + "," + std::to_string(second + 1) + ")";
  }
  return "?";
}

std::vector<Exponent> CertifiedBasis::heads() const {
  std::vector<Exponent> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.initial_exponent());
  return out;
}

namespace {

// Runs the pair criterion for (i, j); returns the check and, on failure,
// leaves the nonzero remainder in the check.
PairCheck check_pair(const std::vector<Series>& s, std::size_t i, std::size_t j, const Rational& mu,
                     const BasisOptions& options) {
  PairCheck pc;
  pc.i = i;
  pc.j = j;
  Exponent hi = s[i].initial_exponent(), hj = s[j].initial_exponent();
  if (!s[i].form().within(lcm(hi, hj), mu)) {
    pc.outcome = PairCheck::Outcome::BeyondWindow;
    return pc;
  }
  if (options.coprime_criterion && hi.coprime(hj)) {
    pc.outcome = PairCheck::Outcome::Coprime;
    return pc;
  }
  auto rep = has_standard_representation(s_series(s[i], s[j]), s, mu);
  if (rep.exists) {
    pc.outcome = PairCheck::Outcome::Reduced;
  } else {
    pc.outcome = PairCheck::Outcome::Failed;
    pc.remainder = std::move(rep.division.remainder);
  }
  return pc;
}

void check_members(const std::vector<Series>& s, const Rational& mu) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].precision().reaches(mu))
      throw PrecisionShortfall("element " + std::to_string(i + 1) + " certified to " + s[i].precision().to_string() +
                               " < " + mu.get_str());
    if (s[i].empty()) throw ZeroUpToPrecision("element " + std::to_string(i + 1) + " vanishes up to its precision");
    if (i && !(s[i].form() == s[0].form())) throw InvalidArgument("elements carry different linear forms");
  }
}

} // namespace

CertifiedBasis becker_check(const std::vector<Series>& s, const Rational& mu, const BasisOptions& options) {
  if (s.empty()) throw InvalidArgument("becker_check needs at least one element");
  check_members(s, mu);
  CertifiedBasis out;
  out.gens = s;
  out.form = s.front().form();
  out.mu = mu;
  out.verified = true;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      out.pairs.push_back(check_pair(s, i, j, mu, options));
      if (out.pairs.back().outcome == PairCheck::Outcome::Failed) out.verified = false;
    }
  return out;
}

CertifiedBasis complete(const IdealPresentation& ideal, const LinearForm& form, const Rational& mu,
                        const BasisOptions& options) {
  ideal.validate();
  if (form.dim() != ideal.dim()) throw DimensionMismatch("form dimension differs from the ideal's");
  CertifiedBasis out;
  out.form = form;
  out.mu = mu;

  auto monic = [](Series s) { return s.scaled(1 / s.leading_coefficient()); };

  for (std::size_t k = 0; k < ideal.gens.size(); ++k) {
    Series g = ideal.gens[k].rebased(form);
    if (!g.precision().reaches(mu))
      throw PrecisionShortfall("generator " + std::to_string(k + 1) + " is certified to " + g.precision().to_string() +
                               " under " + form.to_string() + ", below " + mu.get_str());
    g = g.truncated(mu);
    if (g.empty()) {
      out.dropped_inputs.push_back(k);
      continue;
    }
    Exponent h = g.initial_exponent();
    bool covered = false;
    for (const auto& b : out.gens)
      if (b.initial_exponent().divides(h)) covered = true;
    if (!covered) {
      out.gens.push_back(std::move(g));
      out.provenance.push_back({Provenance::Kind::Input, k, 0});
      continue;
    }
    auto r = hironaka_divide(g, out.gens, mu).remainder;
    if (r.empty()) {
      out.dropped_inputs.push_back(k);
    } else {
      out.gens.push_back(monic(std::move(r)));
      out.provenance.push_back({Provenance::Kind::ReducedInput, k, 0});
    }
  }
  if (out.gens.empty()) {
    out.verified = true;
    out.note = "every generator vanishes up to the certification precision";
    return out;
  }

  // Pending pairs ordered by (L(lcm), i, j).
  std::set<std::tuple<std::int64_t, std::size_t, std::size_t>> pending;
  std::vector<Exponent> heads = out.heads();
  auto enqueue = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(form.scaled_value(lcm(heads[i], heads[j])), i, j);
  };
  for (std::size_t j = 1; j < out.gens.size(); ++j) enqueue(j);

  while (!pending.empty()) {
    auto [lv, i, j] = *pending.begin();
    pending.erase(pending.begin());
    PairCheck pc = check_pair(out.gens, i, j, mu, options);
    if (pc.outcome == PairCheck::Outcome::Failed) {
      if (out.gens.size() >= options.max_elements) {
        out.pairs.push_back(std::move(pc));
        out.verified = false;
        out.note = "element budget of " + std::to_string(options.max_elements) + " exhausted";
        return out;
      }
      out.gens.push_back(monic(pc.remainder));
      out.provenance.push_back({Provenance::Kind::SSeries, i, j});
      heads.push_back(out.gens.back().initial_exponent());
      enqueue(out.gens.size() - 1);
      pc.remainder = Series();
      pc.outcome = PairCheck::Outcome::Adjoined;
    }
    out.pairs.push_back(std::move(pc));
  }
  out.verified = true;
  return out;
}

} // namespace locbasis

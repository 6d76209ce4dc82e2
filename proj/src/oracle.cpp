#include "locbasis/oracle.hpp"

#include "locbasis/diagram.hpp"
#include "locbasis/errors.hpp"

namespace locbasis {

JetSpan::JetSpan(std::size_t n, unsigned eta) : n_(n), eta_(eta) {
  auto std_form = LinearForm::standard(n);
  for_each_exponent_within(std_form, Rational(eta), [&](const Exponent& b) { monomials_.push_back(b); });
  // Columns ordered by degree, so leading columns are low-degree terms.
  std::sort(monomials_.begin(), monomials_.end(), LinearForm::Less{&std_form});
  for (std::uint32_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  pivots_.resize(monomials_.size());
}

JetSpan::Row JetSpan::to_row(const Series& f) const {
  if (f.dim() != n_) throw DimensionMismatch("jet span and series dimensions differ");
  Series s = f.rebased(LinearForm::standard(n_));
  if (!s.precision().reaches(Rational(eta_)))
    throw PrecisionShortfall("series known only to degree " + s.precision().to_string() + ", jet level is " +
                             std::to_string(eta_));
  Row row;
  for (const auto& [e, c] : s.terms())
    if (e.total() <= eta_) row.emplace_back(index_.at(e), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

JetSpan::Row JetSpan::reduce(Row row) const {
  Row scratch;
  std::size_t start = 0; // entries before start are non-pivot columns already kept
  while (start < row.size()) {
    std::uint32_t lead = row[start].first;
    const Row& p = pivots_[lead];
    if (p.empty()) {
      ++start;
      continue;
    }
    // row -= row[lead] * p, where p is monic.
    Rational factor = row[start].second;
    scratch.clear();
    scratch.insert(scratch.end(), row.begin(), row.begin() + static_cast<std::ptrdiff_t>(start));
    std::size_t i = start, j = 0;
    while (i < row.size() || j < p.size()) {
      if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
        scratch.push_back(std::move(row[i++]));
      } else if (i == row.size() || p[j].first < row[i].first) {
        scratch.emplace_back(p[j].first, -factor * p[j].second);
        ++j;
      } else {
        Rational v = row[i].second - factor * p[j].second;
        if (sgn(v) != 0) scratch.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row.swap(scratch);
  }
  return row;
}

void JetSpan::insert(Row row) {
  row = reduce(std::move(row));
  // reduce() leaves non-pivot columns in place; the first one becomes a pivot.
  if (row.empty()) return;
  Rational inv = 1 / row.front().second;
  for (auto& [c, v] : row) v *= inv;
  std::uint32_t lead = row.front().first;
  pivots_[lead] = std::move(row);
  ++rank_;
}

void JetSpan::add(const Series& f) { insert(to_row(f)); }

void JetSpan::add_ideal(const IdealPresentation& ideal) {
  for (const auto& g : ideal.gens) {
    Row base = to_row(g);
    if (base.empty()) continue;
    std::uint64_t ord = monomials_[base.front().first].total();
    for (const auto& shift : monomials_) {
      if (shift.total() + ord > eta_) break;
      Row r;
      for (const auto& [c, v] : base) {
        Exponent e = monomials_[c] + shift;
        if (e.total() <= eta_) r.emplace_back(index_.at(e), v);
      }
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      insert(std::move(r));
    }
  }
}

void JetSpan::add_monomials(const std::function<bool(const Exponent&)>& keep) {
  for (std::uint32_t i = 0; i < monomials_.size(); ++i)
    if (keep(monomials_[i])) insert(Row{{i, Rational(1)}});
}

bool JetSpan::contains(const Series& f) const { return reduce(to_row(f)).empty(); }

bool JetSpan::contains_monomial(const Exponent& b) const {
  if (b.total() > eta_) return true; // zero in the jet space
  return reduce(Row{{index_.at(b), Rational(1)}}).empty();
}

bool JetSpan::includes(const JetSpan& other) const {
  if (other.n_ != n_ || other.eta_ != eta_) throw InvalidArgument("comparing jet spans of different shapes");
  for (const auto& p : other.pivots_)
    if (!p.empty() && !reduce(p).empty()) return false;
  return true;
}

std::uint64_t oracle_jet_quotient_dim(const IdealPresentation& ideal, unsigned eta) {
  JetSpan span(ideal.dim(), eta);
  span.add_ideal(ideal);
  return span.codim();
}

} // namespace locbasis

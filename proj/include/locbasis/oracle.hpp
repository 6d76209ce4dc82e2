#pragma once

#include "locbasis/series.hpp"

#include <functional>
#include <map>
#include <vector>

namespace locbasis {

/// A subspace of the jet space K[x]/m^{eta+1}, held as sparse rows in echelon
/// form over the monomial basis {|b| <= eta}. Plain linear algebra, kept
/// apart from the division and standard-basis code so it can check them.
class JetSpan {
public:
  JetSpan(std::size_t n, unsigned eta);

  std::size_t dim() const noexcept { return n_; }
  unsigned eta() const noexcept { return eta_; }
  std::size_t basis_size() const noexcept { return monomials_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t codim() const noexcept { return basis_size() - rank_; }

  /// Adds the eta-jet of f. f must know every term of degree <= eta.
  void add(const Series& f);
  /// Adds x^c g for every generator g and every monomial x^c.
  void add_ideal(const IdealPresentation& ideal);
  /// Adds every basis monomial satisfying keep.
  void add_monomials(const std::function<bool(const Exponent&)>& keep);

  bool contains(const Series& f) const;
  bool contains_monomial(const Exponent& b) const;
  /// other is a subspace of this.
  bool includes(const JetSpan& other) const;
  friend bool same_span(const JetSpan& a, const JetSpan& b) { return a.includes(b) && b.includes(a); }

private:
  using Row = std::vector<std::pair<std::uint32_t, Rational>>;

  Row to_row(const Series& f) const;
  /// Reduces row against the pivots; returns the residue (empty if in span).
  Row reduce(Row row) const;
  void insert(Row row);

  std::size_t n_;
  unsigned eta_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::uint32_t> index_;
  std::vector<Row> pivots_; // pivots_[c] has leading column c, or is empty
  std::size_t rank_ = 0;
};

/// dim K[x]/(I + m^{eta+1}) by row reduction.
std::uint64_t oracle_jet_quotient_dim(const IdealPresentation& ideal, unsigned eta);

} // namespace locbasis

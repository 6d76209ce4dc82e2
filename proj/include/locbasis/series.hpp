#pragma once

#include "locbasis/exponent.hpp"
#include "locbasis/linear_form.hpp"
#include "locbasis/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace locbasis {

/// Certified precision of a truncated series: either EXACT (an honest
/// polynomial) or a bound p meaning every coefficient with L-value <= p is
/// known and every coefficient above it is unknown.
class Precision {
public:
  Precision() = default; // exact
  static Precision exact() { return Precision(); }
  static Precision at(Rational p) {
    Precision out;
    p.canonicalize();
    out.bound_ = std::move(p);
    return out;
  }

  bool is_exact() const noexcept { return !bound_.has_value(); }
  /// Throws InvalidArgument for an exact precision.
  const Rational& bound() const;
  /// Exact, or bound >= mu.
  bool reaches(const Rational& mu) const { return is_exact() || *bound_ >= mu; }

  Precision operator+(const Rational& shift) const;
  Precision operator*(const Rational& factor) const;

  std::string to_string() const;

  friend Precision min(const Precision& a, const Precision& b);
  friend bool operator==(const Precision&, const Precision&) = default;

private:
  std::optional<Rational> bound_;
};

/// Sparse multivariate truncated power series over Q.
///
/// Invariants: no stored coefficient is zero; when the precision is a bound
/// p, every stored exponent b satisfies L(b) <= p for the series' form.
///
/// "Zero" comes in two strengths: is_exact_zero() (no terms, EXACT) and
/// empty() (no terms inside the window, possibly nonzero above it).
Precision min(const Precision& a, const Precision& b);

class Series {
public:
  using TermMap = std::map<Exponent, Rational>;

  Series() = default;
  explicit Series(LinearForm form, Precision prec = Precision::exact());

  static Series constant(const LinearForm& form, const Rational& c);
  static Series monomial(const LinearForm& form, const Exponent& e, const Rational& c = Rational(1));
  static Series variable(const LinearForm& form, std::size_t i);

  std::size_t dim() const noexcept { return form_.dim(); }
  const LinearForm& form() const noexcept { return form_; }
  const Precision& precision() const noexcept { return prec_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool empty() const noexcept { return terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && prec_.is_exact(); }
  bool is_exact() const noexcept { return prec_.is_exact(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  /// Accumulates c x^e. Terms outside the precision window are discarded.
  void add_term(const Exponent& e, const Rational& c);

  /// L-minimal stored exponent under the series' own form. Stored terms are
  /// always certified, so this is the true initial exponent whenever it
  /// exists. Throws ZeroUpToPrecision when the window holds no term.
  Exponent initial_exponent() const;
  std::optional<Exponent> try_initial_exponent() const;
  const Rational& leading_coefficient() const;
  /// L-value of the initial exponent, or the precision bound when empty.
  /// Throws InvalidArgument for the exact zero.
  Rational order() const;

  /// Drops every term with L-value > p and caps the precision at p.
  Series truncated(const Rational& p) const;
  /// Same terms reinterpreted under another form, with the precision
  /// converted conservatively (see precision_factor).
  Series rebased(const LinearForm& to) const;
  /// Forgets the precision bound. Only for genuinely polynomial results.
  Series as_exact() const;

  Series operator-() const;
  Series& operator+=(const Series& rhs);
  Series& operator-=(const Series& rhs);
  Series scaled(const Rational& c) const;
  /// x^e * this; precision shifts by L(e).
  Series shifted(const Exponent& e) const;

  /// Composition with x -> M x (x_i replaced by sum_j M_ij x_j).
  Series substitute_linear(const std::vector<std::vector<Rational>>& matrix) const;
  /// Sets x_{k+1} = ... = x_n = 0 and views the result in k variables.
  Series evaluate_tail_zero(std::size_t k) const;
  /// Views this series in a larger ambient space; new variables appended.
  Series embedded(const LinearForm& wider) const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  /// Terms in increasing monomial order, e.g. "y^5 + y^2*z^4 - 1/2*x".
  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

private:
  void check_compatible(const Series& rhs) const;
  Series& accumulate(const Series& rhs, int sign);

  LinearForm form_;
  Precision prec_;
  TermMap terms_;
};

Series pow(const Series& base, unsigned exponent);

/// Default variable names x1..xn (or x,y,z for n <= 3).
std::vector<std::string> default_names(std::size_t n);

/// Generators of an ideal of K{x}; all share the same form and dimension.
struct IdealPresentation {
  std::vector<Series> gens;
  std::vector<std::string> names;

  std::size_t dim() const { return names.size(); }
  const LinearForm& form() const;
  /// Throws on empty, mismatched or exactly-zero generators.
  void validate() const;
  IdealPresentation rebased(const LinearForm& to) const;
  /// Minimum certified precision over the generators.
  Precision precision() const;
};

/// Square integer matrix with rows M_i; throws SingularMatrix when det = 0.
Rational determinant(const std::vector<std::vector<Rational>>& matrix);

} // namespace locbasis

#pragma once

#include "locbasis/exponent.hpp"
#include "locbasis/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace locbasis {

/// Positive linear form L(b) = sum_j w_j b_j on N^n together with the total
/// order it induces: exponents compare by the tuple (L(b), b_n, ..., b_1),
/// lexicographically. The tie-break reads coordinates from the last one down
/// and is part of the output contract (axis-vertex results depend on it).
///
/// Weights are kept as exact rationals and also as integers scaled by the
/// common denominator, which is what the hot comparison paths use.
class LinearForm {
public:
  LinearForm() = default;
  /// Throws InvalidArgument unless every weight is strictly positive.
  explicit LinearForm(std::vector<Rational> weights);

  /// All weights 1: L(b) = |b|.
  static LinearForm standard(std::size_t n);
  /// L(b) = b_1 + ... + b_k + l (b_{k+1} + ... + b_n), 1 <= k <= n, l >= 1.
  static LinearForm split(std::size_t n, std::size_t k, std::int64_t l);

  std::size_t dim() const noexcept { return weights_.size(); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  bool is_standard() const noexcept;

  Rational value(const Exponent& b) const;
  /// value(b) * scale(), an exact integer.
  std::int64_t scaled_value(const Exponent& b) const;
  std::int64_t scale() const noexcept { return scale_; }
  /// floor(p * scale()): b lies in {L <= p} iff scaled_value(b) <= scaled_bound(p).
  std::int64_t scaled_bound(const Rational& p) const;
  bool within(const Exponent& b, const Rational& p) const;

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  LinearForm restricted(std::size_t k) const;
  Rational min_weight() const;
  Rational max_weight() const;

  /// "std", or "w:a,b,c" with the weights in canonical rational form.
  std::string to_string() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.weights_ == b.weights_; }

  /// Strict-weak-ordering adaptor for ordered containers.
  struct Less {
    const LinearForm* form;
    bool operator()(const Exponent& a, const Exponent& b) const { return form->less(a, b); }
  };

private:
  void check_dim(const Exponent& b) const;

  std::vector<Rational> weights_;
  std::vector<std::int64_t> scaled_;
  std::int64_t scale_ = 1;
};

/// Parses `std`, `w:1,1,7` (rational weights allowed) or `split:k=2,l=7`
/// for ambient dimension n.
LinearForm parse_form(std::string_view spec, std::size_t n);

/// Largest c with {b : to(b) <= c p} contained in {b : from(b) <= p} for every
/// p >= 0, namely min_j to_j / from_j. A series certified to p under `from` is
/// certified to c p under `to`.
Rational precision_factor(const LinearForm& from, const LinearForm& to);

} // namespace locbasis

#pragma once

#include "locbasis/series.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace locbasis {

/// The partition of N^n induced by an ordered list of head exponents:
/// region i holds the exponents divisible by head i and by no earlier head;
/// everything else is the complement.
class RegionPartition {
public:
  RegionPartition() = default;
  explicit RegionPartition(std::vector<Exponent> heads) : heads_(std::move(heads)) {}

  const std::vector<Exponent>& heads() const noexcept { return heads_; }
  std::size_t size() const noexcept { return heads_.size(); }

  /// Index of the region containing b, or nullopt for the complement.
  std::optional<std::size_t> region_of(const Exponent& b) const;

private:
  std::vector<Exponent> heads_;
};

struct DivisionOptions {
  /// When set, terms sharing the minimal L-value are processed in a random
  /// order drawn from this seed. The result must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

struct DivisionResult {
  std::vector<Series> quotients;
  Series remainder;
  RegionPartition regions;
  /// F = sum Q_i G_i + R holds for every exponent with L-value <= mu.
  Rational mu;
  std::size_t steps = 0;
  /// All inputs were polynomials and no term was cut at mu, so the identity
  /// holds exactly and the outputs are marked EXACT.
  bool exact = false;
};

/// Division of f by the ordered list g to L-value mu under the common form
/// of the inputs. Quotient i is certified to mu - L(head_i), the remainder to
/// mu. Throws PrecisionShortfall if an input is not certified to mu and
/// ZeroUpToPrecision if a divisor has no head inside its window.
DivisionResult hironaka_divide(const Series& f, const std::vector<Series>& g, const Rational& mu,
                               const DivisionOptions& options = {});

/// sum_i Q_i G_i + R - f, for checking reconstruction.
Series division_defect(const Series& f, const std::vector<Series>& g, const DivisionResult& result);

} // namespace locbasis

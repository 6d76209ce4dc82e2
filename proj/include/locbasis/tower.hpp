#pragma once

#include "locbasis/criteria.hpp"
#include "locbasis/weierstrass.hpp"

#include <string>
#include <vector>

namespace locbasis {

struct DiscriminantCertificate {
  unsigned j = 0;
  bool vanishes = false;
  Precision precision; // certification of the value Delta_j(a)
};

/// Level i of a tower: F_i, a distinguished polynomial in x_i with
/// coefficients in x_1..x_{i-1}, stored as a series in x_1..x_i.
struct TowerLevel {
  std::size_t vars = 0;
  bool one = false;    // F_i == 1
  unsigned degree = 0; // p_i
  Series F;
  /// Top level: prod g_k = unit * F_n. Lower levels: the first nonvanishing
  /// discriminant of the level above equals unit * F_i.
  Series unit;
  /// First index with Delta_j(a_{i-1}) nonzero, and the certificates for
  /// Delta_1..Delta_j. Empty when one.
  unsigned j = 0;
  std::vector<DiscriminantCertificate> certificates;
  Series discriminant; // Delta_j(a_{i-1}) in x_1..x_{i-1}
};

struct Tower {
  std::size_t n = 0;
  Rational mu;
  std::uint64_t seed = 0;
  std::vector<std::string> names;
  Matrix change;                  // composite coordinate change, x -> M x
  std::vector<Series> generators; // after the change
  std::vector<Series> sheets;     // distinguished polynomial of each generator
  std::vector<TowerLevel> levels; // levels[i] is F_i, i = 0..n
  /// Some vanishing certificate or level is certified below mu.
  bool undecided = false;
};

struct TowerOptions {
  std::size_t max_retries = 32;
};

/// Coefficients a_1..a_p of x_last^{p-1}, ..., x_last^0 in a polynomial of
/// degree p in its last variable, as series in the remaining variables.
std::vector<Series> coefficients_in_last(const Series& f, unsigned p);

/// Builds F_n = prod of the distinguished polynomials of the g_k (after a
/// seeded change making every g_k regular in x_n) and descends through
/// first nonvanishing generalized discriminants down to F_0 == 1. Throws
/// NotRegular once max_retries coordinate changes have failed.
Tower build_tower(const std::vector<Series>& g, const Rational& mu, std::uint64_t seed,
                  const std::vector<std::string>& names = {}, const TowerOptions& options = {});

struct ConditionCheck {
  int condition = 0; // 1..5
  std::size_t level = 0;
  bool holds = false;
  std::string detail;
};

struct TowerValidation {
  std::vector<ConditionCheck> checks;
  bool all_pass() const;
};

/// Re-derives every condition from the stored polynomials: (1) the product of
/// the generators is unit * F_n and F_n is the product of the sheets; (2)
/// each F_i is monic of degree p_i with lower coefficients vanishing at 0;
/// (3) Delta_k(a) vanishes up to mu for k < j and Delta_j(a) = unit * F_{i-1};
/// (4) F_i(0) = 0 or F_i == 1 with all lower levels == 1; (5) F_0 == 1.
TowerValidation validate_tower(const Tower& tower);

} // namespace locbasis

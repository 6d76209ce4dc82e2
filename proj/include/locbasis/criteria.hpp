#pragma once

#include "locbasis/diagram.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace locbasis {

/// Produces generators of a fixed ideal under the given form, certified to at
/// least the given precision. Lets callers re-expand closed-form generators
/// (e^z and the like) instead of losing precision to rebasing.
using IdealExpander = std::function<IdealPresentation(const LinearForm&, const Rational&)>;

/// Expander that rebases a fixed presentation. Precision is whatever survives
/// the conversion; consumers report shortfalls.
IdealExpander fixed_expander(IdealPresentation ideal);

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(std::size_t n);

enum class FlatVerdict { Flat, NotFlatAtMu };
std::string to_string(FlatVerdict v);

struct FlatnessReport {
  FlatVerdict verdict = FlatVerdict::NotFlatAtMu;
  std::size_t k = 0;
  std::int64_t l0 = 0;
  Rational mu;             // standard-form certification of I(0)
  Rational weighted_prec;  // certification under the split form
  Diagram evaluated;       // N(I(0)) in N^k
  Diagram weighted;        // N(I) under split(k, l0)
  ProductCheck product;
  /// Base of the weighted diagram equals N(I(0)) on {|a| <= mu}.
  bool base_matches_evaluated = false;
};

/// Computes N(I(0)), sets l0 = 1 + max |vertex|, completes I under
/// split(k, l0) to weighted_prec (default l0 * mu) and checks whether the
/// diagram is a product D x N^{n-k}. Throws InvalidArgument when I(0) is
/// trivial and BudgetExceeded when a completion runs out of budget.
FlatnessReport flatness_weight_search(const IdealExpander& expand, std::size_t n, std::size_t k, const Rational& mu,
                                      std::optional<Rational> weighted_prec = {}, const BasisOptions& options = {});

struct DimensionReport {
  std::size_t k_best = 0;
  std::size_t dim_bound = 0; // n - k_best, an upper bound that holds with high probability
  Matrix matrix;             // coordinate change achieving k_best
  std::size_t trial = 0;     // 0 is the identity
  std::size_t trials_run = 0;
  Diagram diagram;
};

/// Number of leading coordinate axes carrying a vertex of d.
std::size_t leading_axis_count(const Diagram& d);

/// Seeded unimodular integer matrix with entries in [-3, 3].
Matrix random_unimodular(std::size_t n, std::uint64_t seed);

/// Tries the identity and then trials - 1 seeded random coordinate changes,
/// completing under the standard form each time; keeps the change with the
/// most leading axis vertices. Trials run concurrently.
DimensionReport axis_vertex_dimension(const IdealPresentation& ideal, const Rational& mu, std::size_t trials,
                                      std::uint64_t seed, const BasisOptions& options = {});

struct IdentityCheck {
  unsigned m = 0;
  bool holds = false;
};

struct ReductionReport {
  std::size_t k = 0;
  std::vector<unsigned> axis_degrees; // d_1..d_k
  unsigned d = 0;
  unsigned eta = 0; // jet level of the oracle checks
  bool inclusion_holds = false;
  std::vector<Exponent> failing_monomials;
  std::vector<IdentityCheck> identities;
  Diagram diagram;
};

/// Reads d_j off the axis vertices of the standard diagram (certified to mu),
/// sets d = sum (d_j - 1) and checks with the oracle, at jet level eta
/// (default d + 3), that every degree-(d+1) monomial in x_1..x_k lies in
/// I + (x_{k+1},...,x_n) m^d, and that I + m^{d+m} = I + (x_{k+1},...)^m m^d
/// for m = 1, 2. Throws InvalidArgument when an axis vertex is missing.
ReductionReport reduction_exponent(const IdealExpander& expand, std::size_t n, std::size_t k, const Rational& mu,
                                   std::optional<unsigned> eta = {}, const BasisOptions& options = {});

} // namespace locbasis

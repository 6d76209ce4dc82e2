#pragma once

#include "locbasis/series.hpp"

#include <vector>

namespace locbasis {

/// A symmetric polynomial in T_1..T_p rewritten in the elementary symmetric
/// variables A_0 = T_1...T_p, ..., A_{p-1} = T_1 + ... + T_p. expr is an
/// exact polynomial in p variables, variable k standing for A_k.
struct SymmetricReduction {
  unsigned p = 0;
  unsigned j = 0;
  Series expr;
};

/// Largest supported degree; the raw expansion grows quickly beyond it.
inline constexpr unsigned kMaxDiscriminantDegree = 6;

/// sum over (j-1)-subsets R of {1..p} of prod over ordered pairs k != l
/// outside R of (T_k - T_l), as an exact polynomial in T_1..T_p.
Series raw_discriminant(unsigned p, unsigned j);

/// e_i(T_1..T_p); e_0 = 1.
Series elementary_symmetric(unsigned p, unsigned i);

/// Rewrites a symmetric polynomial in T_1..T_p in the variables A_k by
/// repeatedly cancelling the lexicographically leading term. Throws
/// InvalidArgument if the input is not symmetric.
Series reduce_symmetric(const Series& symmetric);

/// expr with A_k replaced by e_{p-k}(T): the inverse of reduce_symmetric.
Series expand_elementary(const Series& expr);

/// Delta_j for degree p, reduced; computed once per (p, j) and cached.
/// Thread-safe. Requires 1 <= j <= p <= kMaxDiscriminantDegree.
const SymmetricReduction& generalized_discriminant(unsigned p, unsigned j);

/// Evaluates a reduced discriminant at the coefficients of the monic
/// X^p + c_{p-1} X^{p-1} + ... + c_0, with A_k taking the value c_k. The
/// discriminants are even in the roots, so the signs relating c_k to the
/// elementary symmetric functions of the roots drop out.
Rational evaluate(const SymmetricReduction& d, const std::vector<Rational>& coeffs);
/// Same, with series coefficients sharing one form.
Series evaluate(const SymmetricReduction& d, const std::vector<Series>& coeffs);

/// The j with Delta_1 = ... = Delta_j = 0 and Delta_{j+1} != 0 for the monic
/// polynomial with coefficients c_0..c_{p-1}; it has p - j distinct roots.
unsigned distinct_root_count_check(const std::vector<Rational>& coeffs);

} // namespace locbasis

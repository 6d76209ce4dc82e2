#pragma once

#include "locbasis/stdbasis.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace locbasis {

/// Diagram of initial exponents N = vertices + N^n, known inside the window
/// {L <= certified_to} of its form.
struct Diagram {
  std::size_t n = 0;
  std::vector<Exponent> vertices; // minimal antichain, increasing in the form's order
  LinearForm form;
  Rational certified_to;

  bool contains(const Exponent& b) const;
};

/// Keeps the minimal elements of heads (duplicates collapse).
Diagram minimal_diagram(const std::vector<Exponent>& heads, const LinearForm& form, const Rational& certified_to);

/// Throws InvalidArgument for an unverified basis.
Diagram diagram_of(const CertifiedBasis& basis);

/// Calls visit(b) for every b in N^n with L(b) <= bound.
void for_each_exponent_within(const LinearForm& form, const Rational& bound,
                              const std::function<void(const Exponent&)>& visit);

/// #{b not in D : L(b) <= eta}. Throws PrecisionShortfall beyond the window.
std::uint64_t complement_count(const Diagram& d, const Rational& eta);

/// H(0..eta_max) under the standard form; needs eta_max <= basis.mu.
std::vector<std::uint64_t> hilbert_samuel(const CertifiedBasis& basis, unsigned eta_max);

struct EvaluatedIdeal {
  IdealPresentation ideal; // in k variables; empty when trivial
  /// Every generator evaluates to zero (up to its precision).
  bool trivial = false;
};

/// I(0) for x_{k+1} = ... = x_n = 0, 1 <= k < n.
EvaluatedIdeal evaluated_ideal(const IdealPresentation& ideal, std::size_t k);

struct ProductCheck {
  bool product = false;
  std::vector<Exponent> base; // projections of the vertices to N^k
};

/// Whether every vertex has zero coordinates k+1..n.
ProductCheck product_structure_check(const Diagram& d, std::size_t k);

} // namespace locbasis

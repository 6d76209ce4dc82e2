#pragma once

#include "locbasis/series.hpp"

namespace locbasis {

struct Preparation {
  Series P;           // monic in the distinguished variable, lower coefficients vanishing at 0
  Series u;           // unit, u(0) != 0
  unsigned degree = 0;
  LinearForm internal_form; // weighted form under which x_i^degree is the head of f
};

/// Order of f in x_i alone: the least k with x_i^k in supp f, provided it lies
/// inside the window. Throws NotRegular otherwise.
unsigned regularity_order(const Series& f, std::size_t i);

/// f = u P with P a distinguished polynomial in x_i, for f under the
/// standard form. P is obtained as x_i^p minus the remainder of x_i^p on
/// division by f under a weighted form making x_i^p the head of f; u is the
/// quotient of f by P. Both are certified to mu when f is a polynomial, and
/// otherwise to whatever the weighted division supports (at most mu). The
/// identity f = u P is checked before returning. Throws NotRegular.
Preparation weierstrass_prepare(const Series& f, std::size_t i, const Rational& mu);

} // namespace locbasis

#pragma once

#include "locbasis/division.hpp"
#include "locbasis/series.hpp"

#include <string>
#include <vector>

namespace locbasis {

/// g_{b_G} x^{c - b_F} F - f_{b_F} x^{c - b_G} G with x^c the lcm of the two
/// head monomials. The c-term cancels exactly.
Series s_series(const Series& f, const Series& g);

struct Representation {
  bool exists = false;
  DivisionResult division;
};

/// Divides f by basis to mu; a standard representation exists iff the
/// remainder vanishes up to mu. The exact zero always has one.
Representation has_standard_representation(const Series& f, const std::vector<Series>& basis, const Rational& mu);

struct BasisOptions {
  /// Skip pairs whose heads share no variable; they always reduce to zero.
  bool coprime_criterion = true;
  /// Completion stops (unverified) once the basis would exceed this size.
  std::size_t max_elements = 400;
};

struct PairCheck {
  std::size_t i = 0, j = 0;
  enum class Outcome { Reduced, Coprime, BeyondWindow, Failed, Adjoined } outcome = Outcome::Reduced;
  /// Nonempty only for Failed. Adjoined marks a failure whose remainder
  /// completion added to the basis.
  Series remainder;
};

std::string to_string(PairCheck::Outcome outcome);

/// Where a basis element came from. Inputs are numbered from 0.
struct Provenance {
  enum class Kind { Input, ReducedInput, SSeries } kind = Kind::Input;
  std::size_t first = 0;  // input index, or the first element of the pair
  std::size_t second = 0; // second element of the pair (SSeries only)
  std::string to_string() const;
};

struct CertifiedBasis {
  std::vector<Series> gens;
  std::vector<Provenance> provenance; // parallel to gens (empty for becker_check)
  LinearForm form;
  Rational mu;
  bool verified = false;
  std::vector<PairCheck> pairs;
  /// Inputs that vanish up to mu or reduce to zero against earlier elements.
  std::vector<std::size_t> dropped_inputs;
  std::string note;

  std::vector<Exponent> heads() const;
};

/// Tests every pair of s with the standard-representation criterion at mu.
/// Every element must be certified to mu and have a head inside the window.
CertifiedBasis becker_check(const std::vector<Series>& s, const Rational& mu, const BasisOptions& options = {});

/// mu-certified standard basis of the ideal under form, i.e. an exact
/// standard basis of I + (monomials of L-value > mu). Generators are rebased
/// to form and must be certified to mu there (PrecisionShortfall otherwise).
CertifiedBasis complete(const IdealPresentation& ideal, const LinearForm& form, const Rational& mu,
                        const BasisOptions& options = {});

} // namespace locbasis

#pragma once

#include "locbasis/criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace locbasis {

/// mu-jet under the series' own form: terms with L-value > mu dropped, the
/// rest returned as an exact polynomial. Needs f certified to mu.
Series jet(const Series& f, const Rational& mu);
/// mu-jet under another form (f is rebased first).
Series jet(const Series& f, const LinearForm& form, const Rational& mu);

/// G_i = F_i + delta_i with every term of delta_i of L-value > mu, so that
/// the mu-jets of F_i and G_i agree.
struct PerturbationSpec {
  IdealPresentation base;
  Rational mu;
  LinearForm form;
  std::vector<Series> deltas; // one per generator; exact zero allowed
};

/// Throws InvalidArgument when a delta has a term of L-value <= mu.
IdealPresentation perturb(const PerturbationSpec& spec);

struct StabilityPipeline {
  DimensionReport dim;
  std::optional<FlatnessReport> flat; // absent when k_best is 0 or n
  std::vector<std::uint64_t> hs;      // H(0..mu) after the coordinate change
};

struct CiExperimentOptions {
  std::size_t trials = 4;
  std::uint64_t seed = 0;
  BasisOptions basis;
};

struct CiExperimentReport {
  Rational mu;
  std::size_t generators = 0;
  /// Generator count equals the codimension witness k_best.
  bool complete_intersection_shape = false;
  StabilityPipeline base, perturbed;
  bool axis_equal = false, flat_equal = false, hs_equal = false;
  /// max |axis vertex| and the finite-complement bound of N(I(0)).
  std::uint64_t mu1 = 0, mu2 = 0, mu0 = 0;
  bool mu_at_least_mu0 = false;
};

/// Runs axis vertices, flatness and Hilbert-Samuel tables on I and on a
/// mu-jet-equal perturbation I_mu, both after the coordinate change found
/// for I, and compares the outputs.
CiExperimentReport ci_stability_experiment(const IdealExpander& base, const IdealExpander& perturbed, std::size_t n,
                                           const Rational& mu, const CiExperimentOptions& options = {});

struct Claim {
  enum class Status { Pass, Fail, NotApplicable } status = Status::Fail;
  std::string name;
  std::string detail;
};

std::string to_string(Claim::Status s);

struct CounterexampleReport {
  unsigned mu = 0;
  std::string h;
  bool degenerate = false; // h vanishes, so nothing is perturbed
  Rational std_prec;       // certification of the standard-form claims
  Rational weighted_prec;  // certification under split(2, l0)
  std::vector<Claim> claims;
  Diagram diagram;
  FlatnessReport flat, perturbed_flat;
  Series s23;
  Series s23_expected;
  std::vector<std::uint64_t> hs, hs_perturbed;
  std::optional<unsigned> first_hs_difference;

  bool all_pass() const;
};

/// The three-generator example in x, y, z:
///   F1 = x^8, F2 = y^5 + y^2 z^4 e^z, F3 = x^2 y^3 + x^2 z^4 e^z,
/// perturbed by adding y^2 z^4 z^{mu-6} h(z) to F2. h is an expression in z
/// with h(0) = 0. Checks: standard basis with vertices (8,0,0), (0,5,0),
/// (2,3,0); flatness over K{z}; S(G2, G3) = x^2 y^2 z^{mu-2} h; and the loss
/// of flatness after perturbation. Throws InvalidArgument for mu < 8 or
/// h(0) != 0.
CounterexampleReport cm_counterexample_runner(unsigned mu, const std::string& h, const BasisOptions& options = {});

} // namespace locbasis

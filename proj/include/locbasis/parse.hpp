#pragma once

#include "locbasis/series.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace locbasis {

/// Parsed expression tree; expansion is deferred so the same expression can
/// be expanded under different forms and precisions.
struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Neg, Pow, Exp, Geom } kind = Kind::Number;
  Rational value;           // Number
  std::size_t variable = 0; // Variable
  unsigned exponent = 0;    // Pow
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Grammar: rationals (a, a/b), variables, + - * ^ (non-negative integer
/// powers), parentheses, unary minus, exp(u) and geom(u) = sum u^k where u
/// has zero constant term. Throws ParseError with the offending position.
ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& names);

/// Expands e under form. Polynomial parts stay exact; exp and geom are
/// truncated at L-value prec, which makes the result non-exact. Throws
/// InvalidArgument when a builtin is applied to a unit.
Series expand(const ExprPtr& e, const LinearForm& form, const Rational& prec);

/// Convenience: parse and expand in one step.
Series parse_series(std::string_view text, const std::vector<std::string>& names, const LinearForm& form,
                    const Rational& prec);

/// Line-based ideal description:
///   vars: x y z
///   prec: 12
///   order: std            (or w:1,1,9 or split:k=2,l=9)
///   gen: y^5 + y^2*z^4*exp(z)
/// Lines starting with # are comments.
struct IdealFile {
  std::vector<std::string> names;
  Rational prec = 10;
  std::string order = "std";
  std::vector<std::string> sources;
  std::vector<ExprPtr> gens;

  LinearForm form() const { return parse_form(order, names.size()); }
  /// Generators under form, builtins expanded to prec.
  IdealPresentation expand(const LinearForm& form, const Rational& prec) const;
  IdealPresentation expand() const { return expand(form(), prec); }
};

IdealFile parse_ideal_file(std::string_view text);
IdealFile load_ideal_file(const std::string& path);

} // namespace locbasis

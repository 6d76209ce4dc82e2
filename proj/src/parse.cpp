#include "locbasis/parse.hpp"

#include "locbasis/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace locbasis {

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  ExprPtr parse() {
    auto e = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
  }

  ExprPtr sum() {
    auto lhs = product();
    while (true) {
      if (accept('+'))
        lhs = node(Expr::Kind::Add, {lhs, product()});
      else if (accept('-'))
        lhs = node(Expr::Kind::Sub, {lhs, product()});
      else
        return lhs;
    }
  }

  ExprPtr product() {
    auto lhs = unary();
    while (accept('*')) lhs = node(Expr::Kind::Mul, {lhs, unary()});
    return lhs;
  }

  ExprPtr unary() {
    if (accept('-')) return node(Expr::Kind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (!accept('^')) return base;
    skip_space();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    Integer v(digits);
    if (v > Integer(1u << 20)) fail("exponent too large");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->exponent = static_cast<unsigned>(v.get_ui());
    e->args = {base};
    return e;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den = "1";
      std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        den = read_digits();
        if (den.empty()) fail("expected a denominator");
        if (Integer(den) == 0) fail("zero denominator");
      } else {
        pos_ = save;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->value = Rational(Integer(num), Integer(den));
      e->value.canonicalize();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == ident) {
          auto e = std::make_shared<Expr>();
          e->kind = Expr::Kind::Variable;
          e->variable = i;
          return e;
        }
      if (ident == "exp" || ident == "geom") {
        if (!accept('(')) fail("expected '(' after " + ident);
        auto arg = sum();
        if (!accept(')')) fail("expected ')'");
        return node(ident == "exp" ? Expr::Kind::Exp : Expr::Kind::Geom, {arg});
      }
      pos_ = start;
      fail("unknown identifier '" + ident + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

// sum_k c_k u^k truncated at prec, where c_k = 1/k! or 1.
Series expand_builtin(const Series& u, bool factorial, const Rational& prec) {
  const LinearForm& form = u.form();
  if (u.constant_term() != 0) throw InvalidArgument("exp/geom argument must have zero constant term");
  Series one = Series::constant(form, Rational(1));
  if (u.is_exact_zero()) return one;
  Rational order = u.order(); // > 0 since the constant term vanishes
  Series result = one.truncated(prec);
  Series power = one;
  for (unsigned k = 1; Rational(k) * order <= prec; ++k) {
    power = (power * u).truncated(prec);
    if (factorial) power = power.scaled(Rational(1, k));
    result += power;
  }
  // Every omitted power has all its terms beyond prec; the partial products
  // carry the precision of u.
  return result.truncated(min(result.precision(), Precision::at(prec)).bound());
}

} // namespace

ExprPtr parse_expression(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

Series expand(const ExprPtr& e, const LinearForm& form, const Rational& prec) {
  switch (e->kind) {
  case Expr::Kind::Number: return Series::constant(form, e->value);
  case Expr::Kind::Variable: return Series::variable(form, e->variable);
  case Expr::Kind::Add: return expand(e->args[0], form, prec) + expand(e->args[1], form, prec);
  case Expr::Kind::Sub: return expand(e->args[0], form, prec) - expand(e->args[1], form, prec);
  case Expr::Kind::Mul: return expand(e->args[0], form, prec) * expand(e->args[1], form, prec);
  case Expr::Kind::Neg: return -expand(e->args[0], form, prec);
  case Expr::Kind::Pow: return pow(expand(e->args[0], form, prec), e->exponent);
  case Expr::Kind::Exp: return expand_builtin(expand(e->args[0], form, prec), true, prec);
  case Expr::Kind::Geom: return expand_builtin(expand(e->args[0], form, prec), false, prec);
  }
  throw Error("corrupt expression tree");
}

Series parse_series(std::string_view text, const std::vector<std::string>& names, const LinearForm& form,
                    const Rational& prec) {
  if (form.dim() != names.size()) throw DimensionMismatch("form dimension differs from the variable count");
  return expand(parse_expression(text, names), form, prec);
}

IdealPresentation IdealFile::expand(const LinearForm& form, const Rational& prec) const {
  if (form.dim() != names.size()) throw DimensionMismatch("form dimension differs from the variable count");
  IdealPresentation out{{}, names};
  for (const auto& g : gens) out.gens.push_back(locbasis::expand(g, form, prec));
  return out;
}

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_vars = false;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'", 0);
    std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
    try {
      if (key == "vars") {
        std::istringstream vs(value);
        std::string v;
        file.names.clear();
        while (vs >> v) {
          for (const auto& seen : file.names)
            if (seen == v) throw InvalidArgument("duplicate variable '" + v + "'");
          if (v == "exp" || v == "geom") throw InvalidArgument("'" + v + "' is reserved");
          file.names.push_back(v);
        }
        if (file.names.empty()) throw InvalidArgument("no variables declared");
        have_vars = true;
      } else if (key == "prec") {
        file.prec = parse_rational(value);
        if (file.prec < 1) throw InvalidArgument("prec must be at least 1");
      } else if (key == "order") {
        file.order = value;
      } else if (key == "gen") {
        if (!have_vars) throw InvalidArgument("generator before 'vars:'");
        file.gens.push_back(parse_expression(value, file.names));
        file.sources.push_back(value);
      } else {
        throw InvalidArgument("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), 0);
    }
  }
  if (!have_vars) throw ParseError("missing 'vars:' line", 0);
  if (file.gens.empty()) throw ParseError("no 'gen:' lines", 0);
  file.form(); // validates the order line
  return file;
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

} // namespace locbasis

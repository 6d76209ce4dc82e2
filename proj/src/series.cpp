#include "locbasis/series.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>
#include <limits>

namespace locbasis {

// ---------------------------------------------------------------- Precision

const Rational& Precision::bound() const {
  if (!bound_) throw InvalidArgument("exact precision has no bound");
  return *bound_;
}

Precision Precision::operator+(const Rational& shift) const {
  if (!bound_) return *this;
  return Precision::at(*bound_ + shift);
}

Precision Precision::operator*(const Rational& factor) const {
  if (!bound_) return *this;
  return Precision::at(*bound_ * factor);
}

std::string Precision::to_string() const { return bound_ ? bound_->get_str() : std::string("exact"); }

Precision min(const Precision& a, const Precision& b) {
  if (a.is_exact()) return b;
  if (b.is_exact()) return a;
  return *a.bound_ <= *b.bound_ ? a : b;
}

// ------------------------------------------------------------------- Series

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t scaled_bound_of(const LinearForm& form, const Precision& p) {
  return p.is_exact() ? kUnbounded : form.scaled_bound(p.bound());
}

void accumulate_term(Series::TermMap& terms, const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// Product of two term maps keeping only exponents with scaled L-value <= bound.
Series::TermMap multiply_terms(const LinearForm& form, const Series::TermMap& a, const Series::TermMap& b,
                               std::int64_t bound) {
  Series::TermMap out;
  std::vector<std::pair<std::int64_t, const std::pair<const Exponent, Rational>*>> bv;
  bv.reserve(b.size());
  for (const auto& t : b) bv.emplace_back(form.scaled_value(t.first), &t);
  std::sort(bv.begin(), bv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Rational prod;
  for (const auto& [ea, ca] : a) {
    std::int64_t la = form.scaled_value(ea);
    for (const auto& [lb, tb] : bv) {
      if (la + lb > bound) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), tb->second.get_mpq_t());
      accumulate_term(out, ea + tb->first, prod);
    }
  }
  return out;
}

} // namespace

Series::Series(LinearForm form, Precision prec) : form_(std::move(form)), prec_(std::move(prec)) {}

Series Series::constant(const LinearForm& form, const Rational& c) {
  Series s(form);
  s.add_term(Exponent(form.dim()), c);
  return s;
}

Series Series::monomial(const LinearForm& form, const Exponent& e, const Rational& c) {
  if (e.size() != form.dim()) throw DimensionMismatch("monomial exponent does not match form dimension");
  Series s(form);
  s.add_term(e, c);
  return s;
}

Series Series::variable(const LinearForm& form, std::size_t i) {
  if (i >= form.dim()) throw DimensionMismatch("variable index out of range");
  return monomial(form, Exponent::unit(form.dim(), i));
}

Rational Series::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const { return coefficient(Exponent(dim())); }

void Series::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dim()) throw DimensionMismatch("term exponent does not match series dimension");
  if (!prec_.is_exact() && !form_.within(e, prec_.bound())) return;
  Rational v = c;
  v.canonicalize();
  accumulate_term(terms_, e, v);
}

std::optional<Exponent> Series::try_initial_exponent() const {
  if (terms_.empty()) return std::nullopt;
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (form_.less(it->first, best->first)) best = it;
  return best->first;
}

Exponent Series::initial_exponent() const {
  auto e = try_initial_exponent();
  if (!e) throw ZeroUpToPrecision("series has no term inside its precision window (" + prec_.to_string() + ")");
  return *e;
}

const Rational& Series::leading_coefficient() const { return terms_.at(initial_exponent()); }

Rational Series::order() const {
  if (auto e = try_initial_exponent()) return form_.value(*e);
  if (prec_.is_exact()) throw InvalidArgument("the exact zero series has no order");
  return prec_.bound();
}

Series Series::truncated(const Rational& p) const {
  Series out(form_, min(prec_, Precision::at(p)));
  std::int64_t b = form_.scaled_bound(out.prec_.bound());
  for (const auto& [e, c] : terms_)
    if (form_.scaled_value(e) <= b) out.terms_.emplace(e, c);
  return out;
}

Series Series::rebased(const LinearForm& to) const {
  if (to == form_) return *this;
  if (to.dim() != dim()) throw DimensionMismatch("rebasing to a form of different dimension");
  Series out(to, prec_ * precision_factor(form_, to));
  std::int64_t b = scaled_bound_of(to, out.prec_);
  for (const auto& [e, c] : terms_)
    if (to.scaled_value(e) <= b) out.terms_.emplace(e, c);
  return out;
}

Series Series::as_exact() const {
  Series out(*this);
  out.prec_ = Precision::exact();
  return out;
}

void Series::check_compatible(const Series& rhs) const {
  if (rhs.dim() != dim())
    throw DimensionMismatch("series of dimension " + std::to_string(dim()) + " and " + std::to_string(rhs.dim()));
  if (!(rhs.form_ == form_)) throw InvalidArgument("series carry different linear forms");
}

Series& Series::accumulate(const Series& rhs, int sign) {
  check_compatible(rhs);
  Precision p = min(prec_, rhs.prec_);
  if (!(p == prec_)) *this = truncated(p.bound());
  std::int64_t b = scaled_bound_of(form_, prec_);
  for (const auto& [e, c] : rhs.terms_) {
    if (form_.scaled_value(e) > b) continue;
    accumulate_term(terms_, e, sign > 0 ? c : Rational(-c));
  }
  return *this;
}

Series& Series::operator+=(const Series& rhs) { return accumulate(rhs, +1); }
Series& Series::operator-=(const Series& rhs) { return accumulate(rhs, -1); }

Series Series::operator-() const {
  Series out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Series Series::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Series(form_);
  Series out(*this);
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

Series Series::shifted(const Exponent& e) const {
  if (e.size() != dim()) throw DimensionMismatch("shift exponent does not match series dimension");
  Series out(form_, prec_ + form_.value(e));
  for (const auto& [f, c] : terms_) out.terms_.emplace(f + e, c);
  return out;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Series(a.form_);
  Precision p;
  if (a.prec_.is_exact() && b.prec_.is_exact())
    p = Precision::exact();
  else if (a.prec_.is_exact())
    p = b.prec_ + a.order();
  else if (b.prec_.is_exact())
    p = a.prec_ + b.order();
  else
    p = min(a.prec_ + b.order(), b.prec_ + a.order());
  Series out(a.form_, p);
  out.terms_ = multiply_terms(a.form_, a.terms_, b.terms_, scaled_bound_of(a.form_, p));
  return out;
}

Series pow(const Series& base, unsigned exponent) {
  Series result = Series::constant(base.form(), Rational(1));
  Series sq = base;
  while (exponent) {
    if (exponent & 1u) result = result * sq;
    exponent >>= 1u;
    if (exponent) sq = sq * sq;
  }
  return result;
}

Series Series::substitute_linear(const std::vector<std::vector<Rational>>& matrix) const {
  if (matrix.size() != dim()) throw DimensionMismatch("substitution matrix has wrong size");
  for (const auto& row : matrix)
    if (row.size() != dim()) throw DimensionMismatch("substitution matrix is not square");
  if (sgn(determinant(matrix)) == 0) throw SingularMatrix("linear change of coordinates is singular");

  // A term of L-value > p has total degree > p / max w; its image has terms
  // of L-value > p min w / max w.
  Precision p = prec_ * (form_.min_weight() / form_.max_weight());
  std::int64_t bound = scaled_bound_of(form_, p);

  std::vector<TermMap> images(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(matrix[i][j]) != 0) accumulate_term(images[i], Exponent::unit(dim(), j), matrix[i][j]);

  // powers[i][k] = (image of x_i)^k, truncated.
  std::vector<std::vector<TermMap>> powers(dim());
  auto power = [&](std::size_t i, std::size_t k) -> const TermMap& {
    auto& pw = powers[i];
    if (pw.empty()) {
      TermMap one;
      one.emplace(Exponent(dim()), Rational(1));
      pw.push_back(std::move(one));
    }
    while (pw.size() <= k) pw.push_back(multiply_terms(form_, pw.back(), images[i], bound));
    return pw[k];
  };

  Series out(form_, p);
  for (const auto& [e, c] : terms_) {
    TermMap acc;
    acc.emplace(Exponent(dim()), c);
    for (std::size_t i = 0; i < dim() && !acc.empty(); ++i)
      if (e[i]) acc = multiply_terms(form_, acc, power(i, e[i]), bound);
    for (const auto& [f, v] : acc) accumulate_term(out.terms_, f, v);
  }
  return out;
}

Series Series::evaluate_tail_zero(std::size_t k) const {
  if (k < 1 || k >= dim())
    throw InvalidArgument("split index k=" + std::to_string(k) + " must satisfy 1 <= k < n=" + std::to_string(dim()));
  Series out(form_.restricted(k), prec_);
  for (const auto& [e, c] : terms_)
    if (e.tail_zero(k)) out.terms_.emplace(e.head(k), c);
  return out;
}

Series Series::embedded(const LinearForm& wider) const {
  if (wider.dim() < dim()) throw DimensionMismatch("embedding into a smaller space");
  for (std::size_t j = 0; j < dim(); ++j)
    if (wider.weights()[j] != form_.weights()[j]) throw InvalidArgument("embedding changes existing weights");
  Series out(wider, prec_);
  for (const auto& [e, c] : terms_) {
    Exponent f(wider.dim());
    for (std::size_t j = 0; j < dim(); ++j) f[j] = e[j];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string Series::to_string(std::span<const std::string> names) const {
  if (names.size() != dim()) throw DimensionMismatch("wrong number of variable names");
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, Rational>*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) { return form_.less(a->first, b->first); });
  std::string s;
  bool first = true;
  for (const auto* t : sorted) {
    Rational c = t->second;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!t->first[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[j];
      if (t->first[j] > 1) mono += "^" + std::to_string(t->first[j]);
    }
    if (mono.empty())
      s += c.get_str();
    else if (c == 1)
      s += mono;
    else
      s += c.get_str() + "*" + mono;
  }
  return s;
}

std::string Series::to_string() const {
  auto names = default_names(dim());
  return to_string(names);
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

// -------------------------------------------------------- IdealPresentation

const LinearForm& IdealPresentation::form() const {
  if (gens.empty()) throw InvalidArgument("ideal presentation has no generators");
  return gens.front().form();
}

void IdealPresentation::validate() const {
  if (gens.empty()) throw InvalidArgument("ideal presentation needs at least one generator");
  for (const auto& g : gens) {
    if (g.dim() != dim()) throw DimensionMismatch("generator dimension differs from the variable count");
    if (!(g.form() == gens.front().form())) throw InvalidArgument("generators carry different linear forms");
    if (g.is_exact_zero()) throw InvalidArgument("generators must not be identically zero");
  }
}

IdealPresentation IdealPresentation::rebased(const LinearForm& to) const {
  IdealPresentation out{{}, names};
  for (const auto& g : gens) out.gens.push_back(g.rebased(to));
  return out;
}

Precision IdealPresentation::precision() const {
  Precision p;
  for (const auto& g : gens) p = min(p, g.precision());
  return p;
}

Rational determinant(const std::vector<std::vector<Rational>>& matrix) {
  std::size_t n = matrix.size();
  auto a = matrix;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

} // namespace locbasis

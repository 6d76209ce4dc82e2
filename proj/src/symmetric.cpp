#include "locbasis/symmetric.hpp"

#include "locbasis/errors.hpp"

#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace locbasis {

namespace {

void check_degree(unsigned p) {
  if (p < 1 || p > kMaxDiscriminantDegree)
    throw InvalidArgument("discriminant degree must lie in 1.." + std::to_string(kMaxDiscriminantDegree));
}

// Calls visit on every size-r subset of {0..p-1}, as a membership mask.
template <class Visit>
void for_each_subset(unsigned p, unsigned r, std::vector<bool>& mask, unsigned start, Visit&& visit) {
  if (r == 0) {
    visit(mask);
    return;
  }
  for (unsigned i = start; i + r <= p; ++i) {
    mask[i] = true;
    for_each_subset(p, r - 1, mask, i + 1, visit);
    mask[i] = false;
  }
}

} // namespace

Series elementary_symmetric(unsigned p, unsigned i) {
  auto form = LinearForm::standard(p);
  Series out(form);
  if (i > p) return out;
  std::vector<bool> mask(p, false);
  for_each_subset(p, i, mask, 0, [&](const std::vector<bool>& m) {
    Exponent e(p);
    for (unsigned k = 0; k < p; ++k) e[k] = m[k] ? 1 : 0;
    out.add_term(e, 1);
  });
  return out;
}

Series raw_discriminant(unsigned p, unsigned j) {
  check_degree(p);
  if (j < 1 || j > p) throw InvalidArgument("discriminant index must satisfy 1 <= j <= p");
  auto form = LinearForm::standard(p);
  Series total(form);
  std::vector<bool> mask(p, false);
  for_each_subset(p, j - 1, mask, 0, [&](const std::vector<bool>& removed) {
    std::vector<unsigned> keep;
    for (unsigned k = 0; k < p; ++k)
      if (!removed[k]) keep.push_back(k);
    // prod_{k != l} (T_k - T_l) = (-1)^{m(m-1)/2} (prod_{k < l} (T_k - T_l))^2
    Series vandermonde = Series::constant(form, 1);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        vandermonde = vandermonde * (Series::variable(form, keep[a]) - Series::variable(form, keep[b]));
    std::size_t m = keep.size();
    Series term = vandermonde * vandermonde;
    total += (m * (m - 1) / 2) % 2 ? -term : term;
  });
  return total;
}

Series reduce_symmetric(const Series& symmetric) {
  if (!symmetric.is_exact()) throw InvalidArgument("symmetric reduction needs an exact polynomial");
  const unsigned p = static_cast<unsigned>(symmetric.dim());
  auto form = LinearForm::standard(p);
  std::vector<Series> e(p + 1);
  for (unsigned i = 0; i <= p; ++i) e[i] = elementary_symmetric(p, i);
  // powers[i][k] = e_{i}^k, grown on demand.
  std::vector<std::vector<Series>> powers(p + 1);
  auto power = [&](unsigned i, unsigned k) -> const Series& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Series::constant(form, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * e[i]);
    return pw[k];
  };

  Series rest = symmetric;
  Series expr(form);
  while (!rest.empty()) {
    const auto& [lead, c] = *rest.terms().rbegin(); // lexicographically largest
    Exponent a = lead;
    Rational coeff = c;
    for (unsigned k = 0; k + 1 < p; ++k)
      if (a[k] < a[k + 1]) throw InvalidArgument("polynomial is not symmetric");
    // c T^a is the leading term of c e_1^{a1-a2} e_2^{a2-a3} ... e_p^{ap}.
    Series product = Series::constant(form, coeff);
    Exponent in_a(p);
    for (unsigned i = 1; i <= p; ++i) {
      unsigned k = a[i - 1] - (i < p ? a[i] : 0);
      if (k == 0) continue;
      product = product * power(i, k);
      in_a[p - i] = k; // A_{p-i} = e_i
    }
    expr.add_term(in_a, coeff);
    rest -= product;
  }
  return expr;
}

Series expand_elementary(const Series& expr) {
  const unsigned p = static_cast<unsigned>(expr.dim());
  auto form = LinearForm::standard(p);
  Series out(form);
  for (const auto& [a, c] : expr.terms()) {
    Series term = Series::constant(form, c);
    for (unsigned k = 0; k < p; ++k)
      if (a[k]) term = term * pow(elementary_symmetric(p, p - k), a[k]);
    out += term;
  }
  return out;
}

const SymmetricReduction& generalized_discriminant(unsigned p, unsigned j) {
  check_degree(p);
  if (j < 1 || j > p) throw InvalidArgument("discriminant index must satisfy 1 <= j <= p");
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_future<std::shared_ptr<const SymmetricReduction>>> cache;
  std::shared_future<std::shared_ptr<const SymmetricReduction>> entry;
  std::promise<std::shared_ptr<const SymmetricReduction>> promise;
  bool compute = false;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({p, j});
    if (it == cache.end()) {
      entry = promise.get_future().share();
      cache.emplace(std::make_pair(p, j), entry);
      compute = true;
    } else {
      entry = it->second;
    }
  }
  if (compute) {
    try {
      auto r = std::make_shared<SymmetricReduction>();
      r->p = p;
      r->j = j;
      r->expr = reduce_symmetric(raw_discriminant(p, j));
      promise.set_value(std::move(r));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return *entry.get();
}

Rational evaluate(const SymmetricReduction& d, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != d.p) throw DimensionMismatch("need p coefficients");
  Rational total = 0;
  for (const auto& [a, c] : d.expr.terms()) {
    Rational term = c;
    for (unsigned k = 0; k < d.p; ++k)
      for (unsigned t = 0; t < a[k]; ++t) term *= coeffs[k];
    total += term;
  }
  return total;
}

Series evaluate(const SymmetricReduction& d, const std::vector<Series>& coeffs) {
  if (coeffs.size() != d.p) throw DimensionMismatch("need p coefficients");
  const LinearForm& form = coeffs.front().form();
  std::vector<std::vector<Series>> powers(d.p);
  auto power = [&](unsigned k, unsigned e) -> const Series& {
    auto& pw = powers[k];
    if (pw.empty()) pw.push_back(Series::constant(form, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * coeffs[k]);
    return pw[e];
  };
  Series total(form);
  bool first = true;
  for (const auto& [a, c] : d.expr.terms()) {
    Series term = Series::constant(form, c);
    for (unsigned k = 0; k < d.p; ++k)
      if (a[k]) term = term * power(k, a[k]);
    if (first) {
      total = term;
      first = false;
    } else {
      total += term;
    }
  }
  return total;
}

unsigned distinct_root_count_check(const std::vector<Rational>& coeffs) {
  const unsigned p = static_cast<unsigned>(coeffs.size());
  check_degree(p);
  std::vector<std::future<bool>> zero;
  for (unsigned j = 1; j <= p; ++j)
    zero.push_back(std::async(std::launch::async, [&, j] { return evaluate(generalized_discriminant(p, j), coeffs) == 0; }));
  unsigned j = 0;
  std::vector<bool> z;
  for (auto& f : zero) z.push_back(f.get());
  while (j < p && z[j]) ++j;
  return j;
}

} // namespace locbasis

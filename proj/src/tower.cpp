#include "locbasis/tower.hpp"

#include "locbasis/errors.hpp"
#include "locbasis/symmetric.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace locbasis {

std::vector<Series> coefficients_in_last(const Series& f, unsigned p) {
  const std::size_t n = f.dim();
  if (n == 0) throw InvalidArgument("a constant has no distinguished variable");
  auto lower = LinearForm::standard(n - 1);
  std::vector<Series> a;
  for (unsigned j = 1; j <= p; ++j) {
    // x^g x_n^{p-j} is known when |g| + p - j <= prec.
    Precision prec = f.is_exact() ? Precision::exact() : Precision::at(f.precision().bound() - (p - j));
    a.emplace_back(lower, prec);
  }
  for (const auto& [e, c] : f.terms()) {
    unsigned d = e[n - 1];
    if (d >= p) continue;
    a[p - d - 1].add_term(e.head(n - 1), c);
  }
  return a;
}

namespace {

// Block matrix diag(m, I) of size n.
Matrix embed(const Matrix& m, std::size_t n) {
  Matrix out = identity_matrix(n);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = m[r][c];
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix out(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Series change_coordinates(const Series& s, const Matrix& m) {
  if (s.dim() == 0 || s.dim() < m.size()) return s;
  return s.substitute_linear(embed(m, s.dim()));
}

// Delta_1..Delta_p at the coefficients (A_k = coefficient of x^k).
std::vector<Series> discriminants(const std::vector<Series>& a) {
  const unsigned p = static_cast<unsigned>(a.size());
  std::vector<Series> by_power(p);
  for (unsigned k = 0; k < p; ++k) by_power[k] = a[p - 1 - k];
  std::vector<std::future<Series>> jobs;
  for (unsigned j = 1; j <= p; ++j)
    jobs.push_back(std::async(std::launch::async, [&, j] { return evaluate(generalized_discriminant(p, j), by_power); }));
  std::vector<Series> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool reaches(const Series& s, const Rational& mu) { return s.precision().reaches(mu); }

} // namespace

Tower build_tower(const std::vector<Series>& g, const Rational& mu, std::uint64_t seed,
                  const std::vector<std::string>& names, const TowerOptions& options) {
  if (g.empty()) throw InvalidArgument("a tower needs at least one generator");
  const std::size_t n = g.front().dim();
  if (n == 0) throw InvalidArgument("a tower needs at least one variable");
  auto std_form = LinearForm::standard(n);
  for (const auto& gk : g) {
    if (!(gk.form() == std_form)) throw InvalidArgument("tower generators must use the standard form");
    if (gk.is_exact_zero()) throw InvalidArgument("tower generators must be nonzero");
  }

  Tower t;
  t.n = n;
  t.mu = mu;
  t.seed = seed;
  t.names = names.empty() ? default_names(n) : names;
  std::mt19937_64 rng(seed);

  // (a) Make every generator regular in x_n.
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt > options.max_retries) throw NotRegular("no coordinate change made every generator x_n-regular");
    Matrix m = attempt == 0 ? identity_matrix(n) : random_unimodular(n, rng());
    std::vector<Series> changed;
    bool ok = true;
    for (const auto& gk : g) {
      changed.push_back(attempt == 0 ? gk : gk.substitute_linear(m));
      try {
        if (regularity_order(changed.back(), n - 1) == 0) throw InvalidArgument("a generator is a unit");
      } catch (const NotRegular&) {
        ok = false;
        break;
      }
    }
    if (ok) {
      t.change = m;
      t.generators = std::move(changed);
      break;
    }
  }

  // (b) Distinguished polynomials of the generators and their product.
  t.levels.resize(n + 1);
  TowerLevel& top = t.levels[n];
  top.vars = n;
  top.F = Series::constant(std_form, 1);
  top.unit = Series::constant(std_form, 1);
  for (const auto& gk : t.generators) {
    auto prep = weierstrass_prepare(gk, n - 1, mu);
    t.sheets.push_back(prep.P);
    top.F = top.F * prep.P;
    top.unit = top.unit * prep.u;
    top.degree += prep.degree;
  }

  // (c)-(e) Descend through the first nonvanishing discriminants.
  for (std::size_t i = n; i >= 1; --i) {
    TowerLevel& level = t.levels[i];
    auto d = discriminants(coefficients_in_last(level.F, level.degree));
    std::size_t j = 0;
    while (j < d.size() && d[j].empty()) {
      level.certificates.push_back({static_cast<unsigned>(j + 1), true, d[j].precision()});
      if (!d[j].precision().reaches(mu)) t.undecided = true;
      ++j;
    }
    if (j == d.size()) throw Error("the last discriminant is the constant p and cannot vanish");
    level.j = static_cast<unsigned>(j + 1);
    level.certificates.push_back({level.j, false, d[j].precision()});
    level.discriminant = d[j];

    Series D = d[j];
    if (D.constant_term() != 0) {
      for (std::size_t k = 0; k < i; ++k) {
        t.levels[k].vars = k;
        t.levels[k].one = true;
      }
      break;
    }
    // D is not a unit, so it has at least one variable; make it regular in
    // its last variable x_{i-1} and carry the change to every level above.
    const std::size_t m = i - 1;
    Matrix change;
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt > options.max_retries) throw NotRegular("no coordinate change made the discriminant regular");
      change = attempt == 0 ? identity_matrix(m) : random_unimodular(m, rng());
      try {
        regularity_order(attempt == 0 ? D : D.substitute_linear(change), m - 1);
        break;
      } catch (const NotRegular&) {
      }
    }
    if (change != identity_matrix(m)) {
      t.change = multiply(t.change, embed(change, n));
      for (auto& s : t.generators) s = change_coordinates(s, change);
      for (auto& s : t.sheets) s = change_coordinates(s, change);
      for (std::size_t k = i; k <= n; ++k) {
        t.levels[k].F = change_coordinates(t.levels[k].F, change);
        t.levels[k].unit = change_coordinates(t.levels[k].unit, change);
        t.levels[k].discriminant = change_coordinates(t.levels[k].discriminant, change);
      }
      D = level.discriminant;
    }
    auto prep = weierstrass_prepare(D, m - 1, mu);
    TowerLevel& below = t.levels[m];
    below.vars = m;
    below.F = prep.P;
    below.unit = prep.u;
    below.degree = prep.degree;
  }
  for (const auto& level : t.levels)
    if (!level.one && (!reaches(level.F, mu) || !reaches(level.unit, mu))) t.undecided = true;
  return t;
}

bool TowerValidation::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.holds; });
}

namespace {

// s vanishes up to min(mu, its precision); reports the bound used.
bool zero_up_to(const Series& s, const Rational& mu, Rational& used) {
  Precision p = min(s.precision(), Precision::at(mu));
  used = p.bound();
  return s.truncated(used).empty();
}

} // namespace

TowerValidation validate_tower(const Tower& t) {
  TowerValidation out;
  auto add = [&](int condition, std::size_t level, bool holds, std::string detail) {
    out.checks.push_back({condition, level, holds, std::move(detail)});
  };
  if (t.levels.size() != t.n + 1) {
    add(1, t.n, false, "tower has " + std::to_string(t.levels.size()) + " levels, expected " + std::to_string(t.n + 1));
    return out;
  }
  Rational used;

  // (1) The zero set of F_n is that of the generators.
  const TowerLevel& top = t.levels[t.n];
  if (top.one) {
    add(1, t.n, false, "F_n must not be identically 1");
  } else {
    Series product = Series::constant(LinearForm::standard(t.n), 1), sheets = product;
    for (const auto& g : t.generators) product = product * g;
    for (const auto& s : t.sheets) sheets = sheets * s;
    bool a = zero_up_to(product - top.unit * top.F, t.mu, used);
    Rational used2;
    bool b = zero_up_to(sheets - top.F, t.mu, used2);
    add(1, t.n, a && b && top.unit.constant_term() != 0,
        "prod g = u F_n up to " + used.get_str() + (a ? "" : " FAILS") + "; F_n = prod sheets up to " +
            used2.get_str() + (b ? "" : " FAILS"));
  }

  for (std::size_t i = t.n; i >= 1; --i) {
    const TowerLevel& level = t.levels[i];
    if (level.vars != i) add(4, i, false, "level stored with the wrong number of variables");
    if (level.one) continue;
    if (level.F.dim() != i) {
      add(2, i, false, "F has dimension " + std::to_string(level.F.dim()));
      continue;
    }
    // (2) Monic of degree p_i, lower coefficients vanishing at 0.
    bool monic = level.F.coefficient(Exponent::unit(i, i - 1, level.degree)) == 1;
    bool vanish = true, bounded = true;
    for (const auto& [e, c] : level.F.terms()) {
      if (e[i - 1] > level.degree) bounded = false;
      if (e[i - 1] < level.degree && e.total() == e[i - 1]) vanish = false;
      if (e[i - 1] == level.degree && e.total() != e[i - 1]) bounded = false;
    }
    add(2, i, monic && vanish && bounded && level.degree >= 1,
        std::string(monic ? "monic" : "not monic") + " of degree " + std::to_string(level.degree) +
            (vanish ? ", coefficients vanish at 0" : ", a coefficient is a unit") +
            (bounded ? "" : ", stray terms at or above the leading power"));

    // (3) Discriminant certificates, recomputed from F_i.
    auto a = coefficients_in_last(level.F, level.degree);
    auto d = discriminants(a);
    bool certs = level.j >= 1 && level.j <= d.size();
    std::string detail;
    for (unsigned k = 1; certs && k < level.j; ++k) {
      bool z = zero_up_to(d[k - 1], t.mu, used);
      bool certified = d[k - 1].precision().reaches(t.mu);
      certs = certs && z && certified;
      detail += "Delta_" + std::to_string(k) + " = 0 up to " + used.get_str() + (certified ? "" : " (below mu)") + "; ";
    }
    if (certs) {
      const Series& dj = d[level.j - 1];
      const TowerLevel& below = t.levels[i - 1];
      if (below.one) {
        bool unit = dj.constant_term() != 0;
        certs = unit;
        detail += "Delta_" + std::to_string(level.j) + (unit ? " is a unit" : " is not a unit");
      } else {
        bool eq = zero_up_to(dj - below.unit * below.F, t.mu, used);
        certs = eq && dj.constant_term() == 0 && below.unit.constant_term() != 0;
        detail += "Delta_" + std::to_string(level.j) + " = u F_" + std::to_string(i - 1) + " up to " + used.get_str() +
                  (eq ? "" : " FAILS");
      }
    }
    add(3, i, certs, detail);

    // (4) F_i(0) = 0.
    add(4, i, level.F.constant_term() == 0, level.F.constant_term() == 0 ? "F(0) = 0" : "F(0) != 0");
  }

  // (4) once a level is 1, every lower level is 1.
  bool seen_one = false;
  for (std::size_t i = t.n + 1; i-- > 0;) {
    if (t.levels[i].one) seen_one = true;
    else if (seen_one) add(4, i, false, "level below an identically-1 level is not 1");
  }
  add(5, 0, t.levels[0].one, t.levels[0].one ? "F_0 == 1" : "F_0 is not identically 1");
  return out;
}

} // namespace locbasis

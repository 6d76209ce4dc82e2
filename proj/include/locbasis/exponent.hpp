#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace locbasis {

/// A point of N^n. Ordinary comparison operators are plain lexicographic on
/// the coordinates; monomial orders live in LinearForm.
class Exponent {
public:
  using value_type = std::uint32_t;

  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<value_type> init) : e_(init) {}
  explicit Exponent(std::vector<value_type> e) : e_(std::move(e)) {}

  static Exponent unit(std::size_t n, std::size_t i, value_type power = 1) {
    Exponent e(n);
    e.e_[i] = power;
    return e;
  }

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const std::vector<value_type>& values() const noexcept { return e_; }

  std::uint64_t total() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise <=, i.e. *this + N^n contains other.
  bool divides(const Exponent& other) const;
  /// True when both exponents share no variable.
  bool coprime(const Exponent& other) const;

  Exponent& operator+=(const Exponent& rhs);
  /// Requires rhs.divides(*this).
  Exponent operator-(const Exponent& rhs) const;

  /// Keeps coordinates [0, k).
  Exponent head(std::size_t k) const;
  /// True when coordinates k.. are all zero.
  bool tail_zero(std::size_t k) const;

  std::string to_string() const;

  friend Exponent operator+(Exponent lhs, const Exponent& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent& a, const Exponent& b) { return a.e_ <=> b.e_; }

private:
  std::vector<value_type> e_;
};

Exponent lcm(const Exponent& a, const Exponent& b);

} // namespace locbasis

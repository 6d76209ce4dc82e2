#include "locbasis/exponent.hpp"

#include "locbasis/errors.hpp"

#include <algorithm>

namespace locbasis {

std::uint64_t Exponent::total() const noexcept {
  std::uint64_t t = 0;
  for (auto v : e_) t += v;
  return t;
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Exponent::divides(const Exponent& other) const {
  if (size() != other.size()) throw DimensionMismatch("exponent length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Exponent::coprime(const Exponent& other) const {
  if (size() != other.size()) throw DimensionMismatch("exponent length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Exponent& Exponent::operator+=(const Exponent& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("exponent length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
  return *this;
}

Exponent Exponent::operator-(const Exponent& rhs) const {
  if (!rhs.divides(*this)) throw InvalidArgument("exponent subtraction leaves N^n");
  Exponent out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
  return out;
}

Exponent Exponent::head(std::size_t k) const {
  if (k > size()) throw DimensionMismatch("head length exceeds exponent length");
  return Exponent(std::vector<value_type>(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(k)));
}

bool Exponent::tail_zero(std::size_t k) const {
  for (std::size_t i = k; i < e_.size(); ++i)
    if (e_[i] != 0) return false;
  return true;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionMismatch("exponent length mismatch");
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

} // namespace locbasis

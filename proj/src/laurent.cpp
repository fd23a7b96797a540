#include "pcanon/laurent.hpp"

#include <algorithm>
#include <cstdlib>

#include "pcanon/error.hpp"

namespace pcanon {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_ = {constant};
}

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_ = {coeff};
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, std::int64_t>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -high();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

bool LaurentPoly::is_unit() const { return coeffs_.size() == 1 && std::llabs(coeffs_[0]) == 1; }

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw DomainError("Laurent polynomial " + to_string() + " is not a unit");
  return monomial(-low_, coeffs_[0]);
}

bool LaurentPoly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.low_ <=> b.low_; c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    std::int64_t mag = c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace pcanon

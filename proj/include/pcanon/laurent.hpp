#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pcanon {

/// Integer Laurent polynomial in v, stored densely from the lowest nonzero
/// exponent. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, std::int64_t coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly v_inv() { return monomial(-1); }
  static LaurentPoly from_terms(const std::map<int, std::int64_t>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponents; only meaningful when nonzero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  std::map<int, std::int64_t> terms() const;

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  std::int64_t at_one() const;
  bool is_unit() const;
  /// Inverse of +-v^k; throws DomainError otherwise.
  LaurentPoly unit_inverse() const;
  /// All coefficients nonnegative.
  bool nonnegative() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// e.g. "v^-1 + 2 - v^3".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace pcanon

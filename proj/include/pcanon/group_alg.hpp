#pragma once

#include <cstdint>
#include <map>

#include "pcanon/affine_group.hpp"

namespace pcanon {

/// Element of the group ring ZW with no zero entries.
class GroupAlgElt {
 public:
  using Terms = std::map<AffineWeylElement, std::int64_t>;

  GroupAlgElt() = default;
  explicit GroupAlgElt(Terms terms);
  static GroupAlgElt basis(const AffineWeylElement& x, std::int64_t coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const AffineWeylElement& x) const;
  void add(const AffineWeylElement& x, std::int64_t coeff);
  /// Sum of all coefficients.
  std::int64_t mass() const;
  bool nonnegative() const;

  GroupAlgElt& operator+=(const GroupAlgElt& o);
  GroupAlgElt& operator-=(const GroupAlgElt& o);
  friend GroupAlgElt operator+(GroupAlgElt a, const GroupAlgElt& b) { return a += b; }
  friend GroupAlgElt operator-(GroupAlgElt a, const GroupAlgElt& b) { return a -= b; }
  friend GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b);
  friend GroupAlgElt operator*(std::int64_t k, const GroupAlgElt& a);
  friend bool operator==(const GroupAlgElt&, const GroupAlgElt&) = default;
  friend auto operator<=>(const GroupAlgElt&, const GroupAlgElt&) = default;

 private:
  Terms terms_;
};

}  // namespace pcanon

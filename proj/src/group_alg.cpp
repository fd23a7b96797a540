#include "pcanon/group_alg.hpp"

#include <algorithm>

namespace pcanon {

GroupAlgElt::GroupAlgElt(Terms terms) {
  for (auto& [x, c] : terms) add(x, c);
}

GroupAlgElt GroupAlgElt::basis(const AffineWeylElement& x, std::int64_t coeff) {
  GroupAlgElt out;
  out.add(x, coeff);
  return out;
}

std::int64_t GroupAlgElt::coeff(const AffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

void GroupAlgElt::add(const AffineWeylElement& x, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(x, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t GroupAlgElt::mass() const {
  std::int64_t total = 0;
  for (const auto& [x, c] : terms_) total += c;
  return total;
}

bool GroupAlgElt::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

GroupAlgElt& GroupAlgElt::operator+=(const GroupAlgElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

GroupAlgElt& GroupAlgElt::operator-=(const GroupAlgElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b) {
  GroupAlgElt out;
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) out.add(x * y, c * d);
  return out;
}

GroupAlgElt operator*(std::int64_t k, const GroupAlgElt& a) {
  GroupAlgElt out;
  for (const auto& [x, c] : a.terms_) out.add(x, k * c);
  return out;
}

}  // namespace pcanon

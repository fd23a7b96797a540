#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "pcanon/affine_group.hpp"
#include "pcanon/group_alg.hpp"
#include "pcanon/laurent.hpp"

namespace pcanon {

/// Element sum_x c_x H_x of the Hecke algebra in the standard basis.
///
/// H_p is not a separate type: its elements are HeckeElt values supported on
/// W_p, and products there are computed by transporting through F^{-1}.
class HeckeElt {
 public:
  using Terms = std::map<AffineWeylElement, LaurentPoly>;

  HeckeElt() = default;
  static HeckeElt basis(const AffineWeylElement& x, LaurentPoly coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const AffineWeylElement& x) const;
  void add(const AffineWeylElement& x, const LaurentPoly& coeff);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& k, const HeckeElt& a);
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  std::string to_string(const AffineWeylGroup& g) const;

 private:
  Terms terms_;
};

/// h * H_s.
HeckeElt hecke_mul_gen(const AffineWeylGroup& g, const HeckeElt& h, Generator s);
/// H_s * h.
HeckeElt hecke_gen_mul(const AffineWeylGroup& g, Generator s, const HeckeElt& h);
HeckeElt hecke_mul(const AffineWeylGroup& g, const HeckeElt& a, const HeckeElt& b);
HeckeElt hecke_bar(const AffineWeylGroup& g, const HeckeElt& h);

/// H_s + v.
HeckeElt kl_generator(const AffineWeylGroup& g, Generator s);
/// Product of H_s + v over the expression.
HeckeElt kl_product(const AffineWeylGroup& g, const Word& expr);
/// Sum over all subsequences e of v^{d(e)} H_e.
HeckeElt deodhar_expand(const AffineWeylGroup& g, const Word& expr, std::size_t cap = 20);

GroupAlgElt v1_specialize(const HeckeElt& h);

/// Entrywise F and F^{-1} between H and H_p.
HeckeElt frobenius(const AffineWeylGroup& g, const HeckeElt& h, std::int64_t p);
HeckeElt frobenius_inv(const AffineWeylGroup& g, const HeckeElt& h, std::int64_t p);
/// Product of two elements of H_p.
HeckeElt hp_mul(const AffineWeylGroup& g, std::int64_t p, const HeckeElt& a, const HeckeElt& b);

/// Memoized Kazhdan-Lusztig basis elements.
class KLBasis {
 public:
  explicit KLBasis(GroupPtr group, std::size_t cap = 10) : group_(std::move(group)), cap_(cap) {}

  const AffineWeylGroup& group() const { return *group_; }
  std::size_t cap() const { return cap_; }
  /// Throws CapExceeded when length(x) > cap.
  HeckeElt operator()(const AffineWeylElement& x) const;

 private:
  GroupPtr group_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<AffineWeylElement, std::shared_ptr<const HeckeElt>> cache_;
};

}  // namespace pcanon

#pragma once

#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pcanon/hecke.hpp"
#include "pcanon/patterns.hpp"

namespace pcanon {

/// Subset of the coset representatives, indexed in table order.
using ToralSubset = boost::dynamic_bitset<>;

/// Function from the coset representatives to Z[v^{+-1}], with pointwise
/// operations. Elements of the toral coset algebra live in here.
class ToralFunction {
 public:
  ToralFunction() = default;
  ToralFunction(std::size_t size, const LaurentPoly& constant) : values_(size, constant) {}
  explicit ToralFunction(std::vector<LaurentPoly> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const LaurentPoly& operator[](std::size_t w) const { return values_[w]; }
  LaurentPoly& operator[](std::size_t w) { return values_[w]; }
  const std::vector<LaurentPoly>& values() const { return values_; }
  bool is_zero() const;

  ToralFunction& operator+=(const ToralFunction& o);
  ToralFunction& operator-=(const ToralFunction& o);
  ToralFunction& operator*=(const ToralFunction& o);
  friend ToralFunction operator+(ToralFunction a, const ToralFunction& b) { return a += b; }
  friend ToralFunction operator-(ToralFunction a, const ToralFunction& b) { return a -= b; }
  friend ToralFunction operator*(ToralFunction a, const ToralFunction& b) { return a *= b; }
  friend bool operator==(const ToralFunction&, const ToralFunction&) = default;

  ToralFunction bar() const;
  /// Pointwise inverse; throws DomainError if some value is not a unit.
  ToralFunction unit_inverse() const;
  /// q^x(w) = q(w * x).
  ToralFunction twist(const CosetTable& table, const AffineWeylElement& x) const;
  ToralFunction twist(const CosetTable& table, Generator s) const;

 private:
  std::vector<LaurentPoly> values_;
};

/// pW(s,*): representatives w with W_p w s = W_p w.
ToralSubset stay_set(const CosetTable& table, Generator s);
/// A * x = {w * x : w in A}.
ToralSubset act(const CosetTable& table, const ToralSubset& a, const AffineWeylElement& x);
/// u_A: v on A, 1 elsewhere.
ToralFunction u_subset(const ToralSubset& a);
/// u_s = u_{pW(s,*)}.
ToralFunction u_gen(const CosetTable& table, Generator s);
/// Minimal nonempty sets of the Boolean algebra generated by the right
/// translates of the stay sets, ordered by their first element.
std::vector<ToralSubset> atoms(const CosetTable& table);

/// sum_x q_x H^{(*)}_x with toral coefficients on the left.
class StarHeckeElt {
 public:
  using Terms = std::map<AffineWeylElement, ToralFunction>;

  StarHeckeElt() = default;
  static StarHeckeElt basis(const CosetTable& table, const AffineWeylElement& x);
  static StarHeckeElt scalar(const CosetTable& table, const ToralFunction& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const AffineWeylElement& x, const ToralFunction& q);
  ToralFunction coeff(const AffineWeylElement& x, std::size_t size) const;

  StarHeckeElt& operator+=(const StarHeckeElt& o);
  StarHeckeElt& operator-=(const StarHeckeElt& o);
  friend StarHeckeElt operator+(StarHeckeElt a, const StarHeckeElt& b) { return a += b; }
  friend StarHeckeElt operator-(StarHeckeElt a, const StarHeckeElt& b) { return a -= b; }
  friend bool operator==(const StarHeckeElt&, const StarHeckeElt&) = default;

 private:
  Terms terms_;
};

/// q * a (left multiplication by a toral function).
StarHeckeElt star_scale(const ToralFunction& q, const StarHeckeElt& a);
/// a * q.
StarHeckeElt star_mul_fun(const CosetTable& table, const StarHeckeElt& a, const ToralFunction& q);
/// a * H^{(*)}_s.
StarHeckeElt star_mul_gen(const CosetTable& table, const StarHeckeElt& a, Generator s);
StarHeckeElt star_mul(const CosetTable& table, const StarHeckeElt& a, const StarHeckeElt& b);
StarHeckeElt star_bar(const CosetTable& table, const StarHeckeElt& a);
/// H^{(*)}_s + u_s.
StarHeckeElt star_kl_gen(const CosetTable& table, Generator s);
/// Product of H^{(*)}_s over a word (not necessarily reduced).
StarHeckeElt star_word(const CosetTable& table, const Word& word);

/// Element of the (p|*)-bimodule: sum c_z H^{(p|*)}_{xbar|w}, indexed by z = xbar w in W.
using PAstElt = HeckeElt;

PAstElt past_basis(const CosetTable& table, std::size_t w);
/// m * H^{(*)}_s.
PAstElt past_right_gen(const CosetTable& table, const PAstElt& m, Generator s);
/// m * q for a toral function q.
PAstElt past_right_fun(const CosetTable& table, const PAstElt& m, const ToralFunction& q);
/// m * u_A.
PAstElt past_right_act_u(const CosetTable& table, const PAstElt& m, const ToralSubset& a);
PAstElt past_right_act(const CosetTable& table, const PAstElt& m, const StarHeckeElt& a);
/// h * m for h in H_p (a HeckeElt supported on W_p).
PAstElt past_left_act(const CosetTable& table, const HeckeElt& h, const PAstElt& m);

struct PastCheck {
  PAstElt lhs;
  PAstElt rhs;
  bool equal = false;
};

/// H^{(p|*)}_w * KL product over expr, against the pattern-match expansion.
PastCheck past_deodhar_check(const CosetTable& table, std::size_t w, const Word& expr, std::size_t cap = 12);
/// KL product over the S_p-expression x times H^{(p|*)}_e times KL product over y,
/// against the expansion over [x|y]_{p|*}.
PastCheck past_deodhar_check2(const CosetTable& table, const Word& xexpr, const Word& yexpr, std::size_t cap = 12);

}  // namespace pcanon

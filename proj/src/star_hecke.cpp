#include "pcanon/star_hecke.hpp"

#include <algorithm>
#include <set>

#include "pcanon/error.hpp"

namespace pcanon {

namespace {

void check_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DatumMismatch("toral functions over different coset tables");
}

void check_function(const CosetTable& table, const ToralFunction& q) { check_same_size(q.size(), table.size()); }

}  // namespace

bool ToralFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const LaurentPoly& c) { return c.is_zero(); });
}

ToralFunction& ToralFunction::operator+=(const ToralFunction& o) {
  check_same_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) values_[i] = values_[i] + o.values_[i];
  return *this;
}

ToralFunction& ToralFunction::operator-=(const ToralFunction& o) {
  check_same_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) values_[i] = values_[i] - o.values_[i];
  return *this;
}

ToralFunction& ToralFunction::operator*=(const ToralFunction& o) {
  check_same_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) values_[i] = values_[i] * o.values_[i];
  return *this;
}

ToralFunction ToralFunction::bar() const {
  ToralFunction out = *this;
  for (auto& c : out.values_) c = c.bar();
  return out;
}

ToralFunction ToralFunction::unit_inverse() const {
  ToralFunction out = *this;
  for (auto& c : out.values_) c = c.unit_inverse();
  return out;
}

ToralFunction ToralFunction::twist(const CosetTable& table, const AffineWeylElement& x) const {
  check_function(table, *this);
  ToralFunction out = *this;
  for (std::size_t w = 0; w < size(); ++w) out.values_[w] = values_[table.act(w, x)];
  return out;
}

ToralFunction ToralFunction::twist(const CosetTable& table, Generator s) const {
  check_function(table, *this);
  ToralFunction out = *this;
  for (std::size_t w = 0; w < size(); ++w) out.values_[w] = values_[table.act(w, s)];
  return out;
}

ToralSubset stay_set(const CosetTable& table, Generator s) {
  table.group().check_generator(s);
  ToralSubset out(table.size());
  for (std::size_t w = 0; w < table.size(); ++w) out[w] = table.stays(w, s);
  return out;
}

ToralSubset act(const CosetTable& table, const ToralSubset& a, const AffineWeylElement& x) {
  check_same_size(a.size(), table.size());
  ToralSubset out(table.size());
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w]) out[table.act(w, x)] = true;
  return out;
}

ToralFunction u_subset(const ToralSubset& a) {
  ToralFunction out(a.size(), LaurentPoly(1));
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w]) out[w] = LaurentPoly::v();
  return out;
}

ToralFunction u_gen(const CosetTable& table, Generator s) { return u_subset(stay_set(table, s)); }

std::vector<ToralSubset> atoms(const CosetTable& table) {
  const AffineWeylGroup& g = table.group();
  std::set<ToralSubset> seen;
  std::vector<ToralSubset> queue;
  for (Generator s = 0; s < static_cast<Generator>(g.num_generators()); ++s)
    if (seen.insert(stay_set(table, s)).second) queue.push_back(stay_set(table, s));
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Generator s = 0; s < static_cast<Generator>(g.num_generators()); ++s) {
      ToralSubset moved(table.size());
      for (std::size_t w = 0; w < table.size(); ++w)
        if (queue[i][w]) moved[table.act(w, s)] = true;
      if (seen.insert(moved).second) queue.push_back(moved);
    }

  std::map<std::vector<bool>, ToralSubset> by_signature;
  for (std::size_t w = 0; w < table.size(); ++w) {
    std::vector<bool> sig;
    for (const auto& a : queue) sig.push_back(a[w]);
    auto [it, fresh] = by_signature.try_emplace(sig, ToralSubset(table.size()));
    it->second[w] = true;
  }
  std::vector<ToralSubset> out;
  for (auto& [sig, a] : by_signature) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const ToralSubset& x, const ToralSubset& y) {
    return x.find_first() < y.find_first();
  });
  return out;
}

StarHeckeElt StarHeckeElt::basis(const CosetTable& table, const AffineWeylElement& x) {
  table.group().check_element(x);
  StarHeckeElt out;
  out.add(x, ToralFunction(table.size(), LaurentPoly(1)));
  return out;
}

StarHeckeElt StarHeckeElt::scalar(const CosetTable& table, const ToralFunction& q) {
  check_function(table, q);
  StarHeckeElt out;
  out.add(table.group().identity(), q);
  return out;
}

void StarHeckeElt::add(const AffineWeylElement& x, const ToralFunction& q) {
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    if (!q.is_zero()) terms_.emplace(x, q);
    return;
  }
  it->second += q;
  if (it->second.is_zero()) terms_.erase(it);
}

ToralFunction StarHeckeElt::coeff(const AffineWeylElement& x, std::size_t size) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? ToralFunction(size, LaurentPoly(0)) : it->second;
}

StarHeckeElt& StarHeckeElt::operator+=(const StarHeckeElt& o) {
  for (const auto& [x, q] : o.terms_) add(x, q);
  return *this;
}

StarHeckeElt& StarHeckeElt::operator-=(const StarHeckeElt& o) {
  for (const auto& [x, q] : o.terms_) add(x, ToralFunction(q.size(), LaurentPoly(0)) - q);
  return *this;
}

StarHeckeElt star_scale(const ToralFunction& q, const StarHeckeElt& a) {
  StarHeckeElt out;
  for (const auto& [x, c] : a.terms()) out.add(x, q * c);
  return out;
}

StarHeckeElt star_mul_fun(const CosetTable& table, const StarHeckeElt& a, const ToralFunction& q) {
  check_function(table, q);
  StarHeckeElt out;
  for (const auto& [x, c] : a.terms()) out.add(x, c * q.twist(table, x));
  return out;
}

StarHeckeElt star_mul_gen(const CosetTable& table, const StarHeckeElt& a, Generator s) {
  const AffineWeylGroup& g = table.group();
  g.check_generator(s);
  const AffineWeylElement& gen = g.generator(s);
  const ToralFunction u = u_gen(table, s);
  const ToralFunction delta = u.unit_inverse() - u;
  StarHeckeElt out;
  for (const auto& [z, q] : a.terms()) {
    check_function(table, q);
    const AffineWeylElement zs = z * gen;
    out.add(zs, q);
    if (g.is_right_descent(z, s)) out.add(z, q * delta.twist(table, zs));
  }
  return out;
}

StarHeckeElt star_mul(const CosetTable& table, const StarHeckeElt& a, const StarHeckeElt& b) {
  const AffineWeylGroup& g = table.group();
  StarHeckeElt out;
  for (const auto& [y, r] : b.terms()) {
    StarHeckeElt part = star_mul_fun(table, a, r);
    for (Generator s : g.canonical_rex(y)) part = star_mul_gen(table, part, s);
    out += part;
  }
  return out;
}

StarHeckeElt star_bar(const CosetTable& table, const StarHeckeElt& a) {
  const AffineWeylGroup& g = table.group();
  StarHeckeElt out;
  for (const auto& [x, q] : a.terms()) {
    StarHeckeElt part = StarHeckeElt::scalar(table, q.bar());
    for (Generator s : g.canonical_rex(x)) {
      const ToralFunction u = u_gen(table, s);
      part = star_mul_gen(table, part, s) + star_mul_fun(table, part, u - u.unit_inverse());
    }
    out += part;
  }
  return out;
}

StarHeckeElt star_kl_gen(const CosetTable& table, Generator s) {
  StarHeckeElt out = StarHeckeElt::basis(table, table.group().generator(s));
  out.add(table.group().identity(), u_gen(table, s));
  return out;
}

StarHeckeElt star_word(const CosetTable& table, const Word& word) {
  StarHeckeElt out = StarHeckeElt::basis(table, table.group().identity());
  for (Generator s : word) out = star_mul_gen(table, out, s);
  return out;
}

PAstElt past_basis(const CosetTable& table, std::size_t w) {
  if (w >= table.size()) throw InvalidInput("coset representative index out of range");
  return HeckeElt::basis(table.rep(w));
}

PAstElt past_right_gen(const CosetTable& table, const PAstElt& m, Generator s) {
  const AffineWeylGroup& g = table.group();
  g.check_generator(s);
  const AffineWeylElement& gen = g.generator(s);
  PAstElt out;
  for (const auto& [z, c] : m.terms()) {
    g.check_element(z);
    out.add(z * gen, c);
    const CosetDecomposition d = table.decompose(z);
    const CosetStep& step = table.step(d.rep_index, s);
    if (step.stay && g.is_right_descent(g.frobenius_inv(d.xbar, table.p()), step.target))
      out.add(z, (LaurentPoly::v_inv() - LaurentPoly::v()) * c);
  }
  return out;
}

PAstElt past_right_fun(const CosetTable& table, const PAstElt& m, const ToralFunction& q) {
  check_function(table, q);
  PAstElt out;
  for (const auto& [z, c] : m.terms()) out.add(z, q[table.decompose(z).rep_index] * c);
  return out;
}

PAstElt past_right_act_u(const CosetTable& table, const PAstElt& m, const ToralSubset& a) {
  return past_right_fun(table, m, u_subset(a));
}

PAstElt past_right_act(const CosetTable& table, const PAstElt& m, const StarHeckeElt& a) {
  const AffineWeylGroup& g = table.group();
  PAstElt out;
  for (const auto& [x, q] : a.terms()) {
    PAstElt part = past_right_fun(table, m, q);
    for (Generator s : g.canonical_rex(x)) part = past_right_gen(table, part, s);
    out += part;
  }
  return out;
}

PAstElt past_left_act(const CosetTable& table, const HeckeElt& h, const PAstElt& m) {
  const AffineWeylGroup& g = table.group();
  PAstElt out;
  for (const auto& [z, c] : m.terms()) {
    const CosetDecomposition d = table.decompose(z);
    const HeckeElt prod = hp_mul(g, table.p(), h, HeckeElt::basis(d.xbar, c));
    for (const auto& [xbar, k] : prod.terms()) out.add(xbar * table.rep(d.rep_index), k);
  }
  return out;
}

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw CapExceeded("expression of length " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
}

}  // namespace

PastCheck past_deodhar_check(const CosetTable& table, std::size_t w, const Word& expr, std::size_t cap) {
  check_cap(expr.size(), cap);
  const AffineWeylGroup& g = table.group();
  PastCheck out;
  out.lhs = past_basis(table, w);
  for (Generator s : expr)
    out.lhs = past_right_gen(table, out.lhs, s) + past_right_fun(table, out.lhs, u_gen(table, s));
  const AffineWeylElement& rep = table.rep(w);
  for (const Pattern& r : patterns_star(table, expr, w))
    for (const Match& c : matches(r)) {
      const DecoratedMatch d = twisted_stroll(g, c, rep);
      out.rhs.add(rep * d.kept, LaurentPoly::monomial(d.defect));
    }
  out.equal = out.lhs == out.rhs;
  return out;
}

PastCheck past_deodhar_check2(const CosetTable& table, const Word& xexpr, const Word& yexpr, std::size_t cap) {
  check_cap(xexpr.size() + yexpr.size(), cap);
  const AffineWeylGroup& g = table.group();
  PastCheck out;
  const HeckeElt left = frobenius(g, kl_product(g, xexpr), table.p());
  out.lhs = past_basis(table, 0);
  for (Generator s : yexpr)
    out.lhs = past_right_gen(table, out.lhs, s) + past_right_fun(table, out.lhs, u_gen(table, s));
  out.lhs = past_left_act(table, left, out.lhs);
  for (const Pattern& r : patterns_past(table, xexpr, yexpr))
    for (const Match& c : matches(r)) {
      const DecoratedMatch d = twisted_stroll(g, c, g.identity());
      out.rhs.add(d.kept, LaurentPoly::monomial(d.defect));
    }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace pcanon

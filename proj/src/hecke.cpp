#include "pcanon/hecke.hpp"

#include <algorithm>

#include "pcanon/error.hpp"
#include "pcanon/patterns.hpp"

namespace pcanon {

HeckeElt HeckeElt::basis(const AffineWeylElement& x, LaurentPoly coeff) {
  HeckeElt h;
  h.add(x, coeff);
  return h;
}

LaurentPoly HeckeElt::coeff(const AffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add(const AffineWeylElement& x, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(x, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [x, c] : o.terms_) add(x, -c);
  return *this;
}

HeckeElt operator*(const LaurentPoly& k, const HeckeElt& a) {
  HeckeElt out;
  for (const auto& [x, c] : a.terms_) out.add(x, k * c);
  return out;
}

std::string HeckeElt::to_string(const AffineWeylGroup& g) const {
  if (is_zero()) return "0";
  std::vector<std::pair<AffineWeylElement, LaurentPoly>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return g.canonical_less(a.first, b.first); });
  std::string out;
  for (const auto& [x, c] : sorted) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (Generator s : g.canonical_rex(x)) word += std::to_string(s);
    out += "(" + c.to_string() + ")H_" + (word.empty() ? "e" : word);
  }
  return out;
}

namespace {

const LaurentPoly& v_inv_minus_v() {
  static const LaurentPoly d = LaurentPoly::v_inv() - LaurentPoly::v();
  return d;
}

}  // namespace

HeckeElt hecke_mul_gen(const AffineWeylGroup& g, const HeckeElt& h, Generator s) {
  const AffineWeylElement& gen = g.generator(s);
  HeckeElt out;
  for (const auto& [y, c] : h.terms()) {
    g.check_element(y);
    out.add(y * gen, c);
    if (g.is_right_descent(y, s)) out.add(y, v_inv_minus_v() * c);
  }
  return out;
}

HeckeElt hecke_gen_mul(const AffineWeylGroup& g, Generator s, const HeckeElt& h) {
  const AffineWeylElement& gen = g.generator(s);
  HeckeElt out;
  for (const auto& [y, c] : h.terms()) {
    g.check_element(y);
    // s is a left descent of y iff it is a right descent of y^{-1}.
    out.add(gen * y, c);
    if (g.is_right_descent(inverse(y), s)) out.add(y, v_inv_minus_v() * c);
  }
  return out;
}

HeckeElt hecke_mul(const AffineWeylGroup& g, const HeckeElt& a, const HeckeElt& b) {
  HeckeElt out;
  for (const auto& [y, c] : b.terms()) {
    HeckeElt part = c * a;
    for (Generator s : g.canonical_rex(y)) part = hecke_mul_gen(g, part, s);
    out += part;
  }
  return out;
}

HeckeElt hecke_bar(const AffineWeylGroup& g, const HeckeElt& h) {
  const LaurentPoly shift = LaurentPoly::v() - LaurentPoly::v_inv();
  HeckeElt out;
  for (const auto& [x, c] : h.terms()) {
    // bar(H_x) = prod over a rex of (H_s + v - v^{-1})
    HeckeElt part = HeckeElt::basis(g.identity(), c.bar());
    for (Generator s : g.canonical_rex(x)) part = hecke_mul_gen(g, part, s) + shift * part;
    out += part;
  }
  return out;
}

HeckeElt kl_generator(const AffineWeylGroup& g, Generator s) {
  return HeckeElt::basis(g.generator(s)) + HeckeElt::basis(g.identity(), LaurentPoly::v());
}

HeckeElt kl_product(const AffineWeylGroup& g, const Word& expr) {
  HeckeElt out = HeckeElt::basis(g.identity());
  for (Generator s : expr) out = hecke_mul_gen(g, out, s) + LaurentPoly::v() * out;
  return out;
}

HeckeElt deodhar_expand(const AffineWeylGroup& g, const Word& expr, std::size_t cap) {
  HeckeElt out;
  for (const Subsequence& e : subsequences(expr.size(), cap))
    out.add(subsequence_element(g, expr, e), LaurentPoly::monomial(defect(g, expr, e)));
  return out;
}

GroupAlgElt v1_specialize(const HeckeElt& h) {
  GroupAlgElt out;
  for (const auto& [x, c] : h.terms()) out.add(x, c.at_one());
  return out;
}

HeckeElt frobenius(const AffineWeylGroup& g, const HeckeElt& h, std::int64_t p) {
  HeckeElt out;
  for (const auto& [x, c] : h.terms()) out.add(g.frobenius(x, p), c);
  return out;
}

HeckeElt frobenius_inv(const AffineWeylGroup& g, const HeckeElt& h, std::int64_t p) {
  HeckeElt out;
  for (const auto& [x, c] : h.terms()) out.add(g.frobenius_inv(x, p), c);
  return out;
}

HeckeElt hp_mul(const AffineWeylGroup& g, std::int64_t p, const HeckeElt& a, const HeckeElt& b) {
  return frobenius(g, hecke_mul(g, frobenius_inv(g, a, p), frobenius_inv(g, b, p)), p);
}

HeckeElt KLBasis::operator()(const AffineWeylElement& x) const {
  const AffineWeylGroup& g = *group_;
  const Word rex = g.canonical_rex(x);
  if (rex.size() > cap_)
    throw CapExceeded("KL basis element of length " + std::to_string(rex.size()) + " exceeds the cap " +
                      std::to_string(cap_));
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(x); it != cache_.end()) return *it->second;
  }
  HeckeElt result;
  if (rex.empty()) {
    result = HeckeElt::basis(x);
  } else {
    const Generator s = rex.back();
    const AffineWeylElement shorter = x * g.generator(s);
    HeckeElt prod = (*this)(shorter);
    prod = hecke_mul_gen(g, prod, s) + LaurentPoly::v() * prod;
    // Remove self-dual lower terms, longest first.
    while (true) {
      const AffineWeylElement* worst = nullptr;
      std::int64_t worst_len = -1;
      for (const auto& [y, c] : prod.terms()) {
        if (y == x || c.coeff(0) == 0) continue;
        const std::int64_t len = g.length(y);
        if (len > worst_len || (len == worst_len && g.canonical_less(*worst, y))) {
          worst = &y;
          worst_len = len;
        }
      }
      if (worst == nullptr) break;
      const AffineWeylElement y = *worst;
      const LaurentPoly mu = prod.coeff(y).coeff(0);
      prod -= mu * (*this)(y);
    }
    result = std::move(prod);
  }
  std::lock_guard lock(mutex_);
  return *cache_.emplace(x, std::make_shared<const HeckeElt>(std::move(result))).first->second;
}

}  // namespace pcanon

#include "pcanon/verify.hpp"

#include <random>

#include "pcanon/hecke.hpp"
#include "pcanon/io.hpp"
#include "pcanon/realization.hpp"
#include "pcanon/recursion.hpp"
#include "pcanon/star_hecke.hpp"

namespace pcanon {

void VerifyReport::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  counterexamples.push_back(what);
}

nlohmann::json VerifyReport::to_json() const {
  return {{"suite", suite},
          {"passed", passed()},
          {"cases", cases},
          {"failures", failures},
          {"counterexamples", counterexamples},
          {"details", details}};
}

std::vector<Word> words_up_to(std::size_t generators, std::size_t maxlen) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t s = 0; s < generators; ++s) {
        Word w = out[i];
        w.push_back(static_cast<Generator>(s));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

namespace {

Word random_word(std::mt19937& rng, std::size_t generators, std::size_t maxlen) {
  Word w(rng() % (maxlen + 1));
  for (auto& s : w) s = static_cast<Generator>(rng() % generators);
  return w;
}

}  // namespace

VerifyReport verify_deodhar(const AffineWeylGroup& g, std::size_t maxlen) {
  VerifyReport r;
  r.suite = "deodhar";
  std::vector<std::size_t> expressions(maxlen + 1, 0);
  for (const Word& w : words_up_to(g.num_generators(), maxlen)) {
    ++expressions[w.size()];
    r.record(deodhar_expand(g, w) == kl_product(g, w), "expression " + format_word(w));
  }
  nlohmann::json lengths = nlohmann::json::array();
  for (std::size_t len = 1; len <= maxlen; ++len)
    lengths.push_back({{"length", len},
                       {"expressions", expressions[len]},
                       {"subsequences_per_expression", std::size_t{1} << len},
                       {"subsequences", expressions[len] * (std::size_t{1} << len)}});
  r.details["lengths"] = lengths;
  return r;
}

VerifyReport verify_past(const CosetTable& table, std::size_t maxlen, std::size_t prefix_len) {
  VerifyReport r;
  r.suite = "past";
  const AffineWeylGroup& g = table.group();
  const auto words = words_up_to(g.num_generators(), maxlen);
  std::size_t twisted = 0, untwisted = 0;
  for (const Word& w : words)
    for (std::size_t z = 0; z < table.size(); ++z) {
      ++twisted;
      r.record(past_deodhar_check(table, z, w, maxlen).equal,
               "w=" + element_label(g, table.rep(z)) + " expression " + format_word(w));
    }
  for (const Word& x : words_up_to(g.num_generators(), prefix_len))
    for (const Word& y : words) {
      ++untwisted;
      r.record(past_deodhar_check2(table, x, y, maxlen + prefix_len).equal,
               "prefix " + format_word(x) + " expression " + format_word(y));
    }
  r.details = {{"twisted_checks", twisted}, {"untwisted_checks", untwisted}};
  return r;
}

VerifyReport verify_toral(const CosetTable& table, unsigned seed, std::size_t pairs) {
  VerifyReport r;
  r.suite = "toral";
  const std::size_t n = table.size();
  const auto atom_list = atoms(table);
  std::mt19937 rng(seed);
  auto random_subset = [&] {
    ToralSubset out(n);
    for (const auto& a : atom_list)
      if (rng() % 2) out |= a;
    return out;
  };
  ToralSubset all(n);
  all.set();
  const ToralFunction v(n, LaurentPoly::v()), one(n, LaurentPoly(1));
  r.record(u_subset(ToralSubset(n)) == one, "u of the empty set is 1");
  r.record(u_subset(all) == v, "u of everything is v");
  for (std::size_t i = 0; i < pairs; ++i) {
    const ToralSubset a = random_subset(), b = random_subset();
    const ToralFunction ua = u_subset(a), ub = u_subset(b);
    const std::string tag = " for pair " + std::to_string(i);
    r.record(ua * ua == ToralFunction(n, LaurentPoly::v() + 1) * ua - v, "square relation" + tag);
    r.record(ua + ub == u_subset(a | b) + u_subset(a & b), "sum relation" + tag);
    r.record(ua * ub == u_subset(a | b) * u_subset(a & b), "product relation" + tag);
  }
  r.details = {{"atoms", atom_list.size()}, {"pairs", pairs}};
  return r;
}

VerifyReport verify_rlzcoefs(const CosetTable& table) {
  VerifyReport r;
  r.suite = "rlzcoefs";
  const AffineWeylGroup& g = table.group();
  const Realization rlz(table.group_ptr());
  std::size_t stays = 0;
  for (const auto& rec : rlzcoefs_table(rlz, table)) {
    stays += rec.same_coset;
    r.record(rec.consistent(), "w=" + element_label(g, table.rep(rec.w)) + " s=" + std::to_string(rec.s));
  }
  r.details = {{"stay_cases", stays}};
  return r;
}

VerifyReport verify_xi(const CosetTable& table, unsigned seed, std::size_t pairs, std::size_t words) {
  VerifyReport r;
  r.suite = "xi";
  const AffineWeylGroup& g = table.group();
  const std::size_t k = g.num_generators();
  std::mt19937 rng(seed);
  r.record(xi(table, g.identity()) == xi_identity(table), "identity");
  for (std::size_t i = 0; i < pairs; ++i) {
    const Word a = random_word(rng, k, 8), b = random_word(rng, k, 8);
    const auto x = g.from_word(a), y = g.from_word(b);
    r.record(xi_mul(xi(table, x), xi(table, y)) == xi(table, x * y),
             "product of " + format_word(a) + " and " + format_word(b));
  }
  for (Generator s = 0; s < static_cast<Generator>(k); ++s)
    r.record(rho_specialize(table, rho(table, StarHeckeElt::basis(table, g.generator(s)))) ==
                 xi(table, g.generator(s)),
             "generator " + std::to_string(s));
  for (std::size_t i = 0; i < words; ++i) {
    const Word w = random_word(rng, k, 6);
    r.record(rho_specialize(table, rho(table, star_word(table, w))) == xi(table, g.from_word(w)),
             "word " + format_word(w));
  }
  r.details = {{"pairs", pairs}, {"words", words}};
  return r;
}

}  // namespace pcanon

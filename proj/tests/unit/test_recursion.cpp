#include <doctest.h>

#include <random>

#include "pcanon/error.hpp"
#include "pcanon/recursion.hpp"
#include "pcanon/root_datum.hpp"
#include "decompose_oracle.hpp"
#include "words.hpp"

using namespace pcanon;

namespace {

struct Setup {
  GroupPtr g;
  std::shared_ptr<const CosetTable> table;
  Setup(const std::string& label, int p)
      : g(AffineWeylGroup::create(build_root_datum(label))), table(CosetTable::create(g, p)) {}
  AffineWeylElement el(const Word& w) const { return g->from_word(w); }
  std::size_t idx(const Word& w) const { return *table->index_of(el(w)); }
  AffineWeylElement random_element(std::mt19937& rng, std::size_t maxlen) const {
    Word w;
    const std::size_t len = rng() % (maxlen + 1);
    for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Generator>(rng() % g->num_generators()));
    return el(w);
  }
};

GroupAlgElt only(std::size_t n, std::size_t w, std::size_t z, const XiMatrix& m) {
  (void)n;
  return m[w][z];
}

GroupAlgElt paper_target(const Setup& s) {
  GroupAlgElt t;
  const std::vector<std::pair<Word, int>> counts = {{{1, 0, 1}, 1}, {{1, 0}, 1}, {{1}, 2},   {{}, 2},
                                                    {{0}, 2},       {{0, 1}, 2}, {{0, 1, 0}, 1}, {{0, 1, 0, 1}, 1}};
  for (const auto& [w, c] : counts) t.add(s.el(w), c);
  return t;
}

CanonicalLibrary paper_library(const Setup& s) {
  CanonicalLibrary lib;
  lib.p = 3;
  lib.entries[s.el({})] = {GroupAlgElt::basis(s.el({})), "identity", false};
  lib.entries[s.el({1})] = {GroupAlgElt::basis(s.el({})) + GroupAlgElt::basis(s.el({1})), "finite generator", false};
  lib.entries[s.el({0})] = {GroupAlgElt::basis(s.el({})) + GroupAlgElt::basis(s.el({0})), "affine generator", false};
  return lib;
}

}  // namespace

TEST_CASE("matrix recursion on named elements") {
  Setup s("A1", 3);
  const auto& t = *s.table;
  const std::size_t e = s.idx({}), z0 = s.idx({0}), z01 = s.idx({0, 1});
  CHECK(xi(t, s.el({})) == xi_identity(t));

  const XiMatrix x1 = xi(t, s.el({1}));
  CHECK(x1[e][e] == GroupAlgElt::basis(s.el({1})));
  CHECK(x1[z0][z01] == GroupAlgElt::basis(s.el({})));
  CHECK(x1[z01][z0] == GroupAlgElt::basis(s.el({})));
  const XiMatrix x0 = xi(t, s.el({0}));
  CHECK(x0[e][z0] == GroupAlgElt::basis(s.el({})));
  CHECK(x0[z0][e] == GroupAlgElt::basis(s.el({})));
  CHECK(x0[z01][z01] == GroupAlgElt::basis(s.el({0})));
  std::size_t nonzero = 0;
  for (const auto& row : x0)
    for (const auto& c : row) nonzero += !c.is_zero();
  CHECK(nonzero == 3);
  CHECK(xi_mul(x0, x0) == xi_identity(t));
  CHECK(only(3, e, e, x1).mass() == 1);
}

TEST_CASE("matrix recursion is an injective homomorphism") {
  for (const auto& [label, p] : std::vector<std::pair<std::string, int>>{{"A1", 2}, {"A1", 3}, {"A1", 5}, {"A2", 3}}) {
    CAPTURE(label);
    CAPTURE(p);
    Setup s(label, p);
    const auto& t = *s.table;
    std::mt19937 rng(static_cast<unsigned>(p * 31 + label.size()));
    for (int i = 0; i < 200; ++i) {
      const auto y1 = s.random_element(rng, 6), y2 = s.random_element(rng, 6);
      CHECK(xi_mul(xi(t, y1), xi(t, y2)) == xi(t, y1 * y2));
      if (i % 10 == 0) CHECK(xi_mul(xi(t, y1), xi(t, inverse(y1))) == xi_identity(t));
    }
  }
  Setup s("A1", 3);
  std::set<AffineWeylElement> ball;
  for (const Word& w : testing_words::words_up_to(2, 5)) ball.insert(s.el(w));
  std::map<XiMatrix, AffineWeylElement> seen;
  for (const auto& y : ball) CHECK(seen.emplace(xi(*s.table, y), y).second);
}

TEST_CASE("graded action matrices") {
  Setup s("A1", 3);
  const auto& t = *s.table;
  const auto& g = *s.g;
  const std::size_t e = s.idx({}), z0 = s.idx({0}), z01 = s.idx({0, 1});

  const ToralSubset a = stay_set(t, 0);
  const RhoMatrix ru = rho(t, StarHeckeElt::scalar(t, u_subset(a)));
  for (std::size_t w = 0; w < t.size(); ++w)
    for (std::size_t z = 0; z < t.size(); ++z)
      CHECK(ru[w][z] == (w != z ? HeckeElt() : HeckeElt::basis(g.identity(), a[w] ? LaurentPoly::v() : 1)));

  const RhoMatrix r0 = rho(t, StarHeckeElt::basis(t, g.generator(0)));
  CHECK(r0[e][z0] == HeckeElt::basis(g.identity()));
  CHECK(r0[z0][e] == HeckeElt::basis(g.identity()));
  CHECK(r0[z01][z01] == HeckeElt::basis(g.p_generator(0, 3)));

  for (const auto& [label, p] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A2", 3}}) {
    CAPTURE(label);
    Setup h(label, p);
    const auto& tt = *h.table;
    for (Generator q = 0; q < static_cast<Generator>(h.g->num_generators()); ++q) {
      const StarHeckeElt hs = StarHeckeElt::basis(tt, h.g->generator(q));
      const ToralFunction u = u_gen(tt, q);
      const RhoMatrix rs = rho(tt, hs);
      CHECK(rho_mul(tt, rs, rs) ==
            rho(tt, StarHeckeElt::basis(tt, h.g->identity()) + star_scale(u.unit_inverse() - u, hs)));
      CHECK(rho_specialize(tt, rs) == xi(tt, h.g->generator(q)));
    }
    std::mt19937 rng(41);
    for (int i = 0; i < 50; ++i) {
      Word w;
      const std::size_t len = rng() % 7;
      for (std::size_t j = 0; j < len; ++j) w.push_back(static_cast<Generator>(rng() % h.g->num_generators()));
      CHECK(rho_specialize(tt, rho(tt, star_word(tt, w))) == xi(tt, h.el(w)));
      if (i < 10) {
        Word w2{static_cast<Generator>(rng() % h.g->num_generators()), static_cast<Generator>(rng() % h.g->num_generators())};
        CHECK(rho_mul(tt, rho(tt, star_word(tt, w)), rho(tt, star_word(tt, w2))) ==
              rho(tt, star_mul(tt, star_word(tt, w), star_word(tt, w2))));
      }
    }
  }
}

TEST_CASE("generator formula cross-check") {
  for (const auto& [label, p] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A1", 5}, {"A2", 3}, {"B2", 3}}) {
    CAPTURE(label);
    Setup h(label, p);
    for (Generator q = 0; q < static_cast<Generator>(h.g->num_generators()); ++q) {
      const PsiReport r = psi_generator_crosscheck(*h.table, q);
      CHECK(r.zero_pattern_agrees);
      CHECK(r.move_entries_agree);
      std::size_t stays = 0;
      for (std::size_t w = 0; w < h.table->size(); ++w) stays += h.table->stays(w, q);
      CHECK(r.flagged == stays);
    }
  }
  Setup s("A1", 3);
  const PsiReport r = psi_generator_crosscheck(*s.table, 0);
  const std::size_t z01 = s.idx({0, 1});
  const auto& entry = r.entries[z01 * s.table->size() + z01];
  CHECK(entry.kind == PsiEntryKind::StayDiagonal);
  CHECK(entry.literal == "H*_0");
  CHECK(entry.from_rho == "(1)H^(p)_0");
}

TEST_CASE("first row decomposition and F-scaling") {
  Setup s("A1", 3);
  const auto& t = *s.table;
  const auto& g = *s.g;
  auto b = [&](const Word& w) { return GroupAlgElt::basis(s.el(w)); };

  auto buckets = first_row_decomposition(t, b({}));
  CHECK(buckets[s.idx({})] == b({}));

  const GroupAlgElt kl01 = b({}) + b({0}) + b({1}) + b({0, 1});
  buckets = first_row_decomposition(t, kl01);
  CHECK(buckets[s.idx({})] == b({}) + b({1}));
  CHECK(buckets[s.idx({0})] == b({}));
  CHECK(buckets[s.idx({0, 1})] == b({}));
  CHECK(first_row_reconstruct(t, first_row_decomposition(t, paper_target(s))) == paper_target(s));

  CHECK(f_scale(g, 3, b({}), s.el({0, 1})) == b({0, 1}));
  CHECK(f_scale(g, 3, b({0}), s.el({0, 1})) == b({0, 1, 0}));
  CHECK(f_scale(g, 3, b({1}), s.el({})) == b({1}));

  for (const auto& [label, p] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A2", 3}, {"B2", 5}}) {
    Setup h(label, p);
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
      GroupAlgElt x;
      for (int j = 0; j < 4; ++j) x.add(h.random_element(rng, 6), static_cast<int>(rng() % 5) - 2);
      CHECK(first_row_reconstruct(*h.table, first_row_decomposition(*h.table, x)) == x);
    }
  }

  const auto stats = xi_size_stats(t, s.el({0, 1, 0, 1, 0, 1}));
  CHECK(stats.size() == t.size());
  for (const auto& row : stats) CHECK(row.norm >= 0);
}

TEST_CASE("lower bound checker on the worked example") {
  Setup s("A1", 3);
  const auto& t = *s.table;
  const CanonicalLibrary lib = paper_library(s);

  CanonicalLibrary trivial;
  trivial.p = 3;
  trivial.entries[s.el({})] = {GroupAlgElt::basis(s.el({})), "", true};
  auto r = check_lower_bound(t, s.el({}), GroupAlgElt::basis(s.el({})), trivial);
  CHECK(r.feasible);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0].multiplicity == 1);
  CHECK(check_lower_bound(t, s.el({0, 1, 0, 1}), GroupAlgElt(), lib).feasible);

  r = check_lower_bound(t, s.el({0, 1, 0, 1}), paper_target(s), lib);
  CHECK(r.feasible);
  std::map<std::pair<Word, Word>, std::int64_t> got;
  for (const auto& term : r.witness)
    got[{s.g->canonical_rex(term.y), s.g->canonical_rex(t.rep(term.w))}] = term.multiplicity;
  const std::map<std::pair<Word, Word>, std::int64_t> expected = {
      {{{1}, {}}, 2}, {{{1}, {0}}, 1}, {{{0}, {0}}, 1}, {{{1}, {0, 1}}, 1}, {{{0}, {0, 1}}, 1}};
  CHECK(got == expected);

  GroupAlgElt kl0101;
  for (const Word& w : std::vector<Word>{{}, {0}, {1}, {0, 1}, {1, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 0, 1}})
    kl0101.add(s.el(w), 1);
  r = check_lower_bound(t, s.el({0, 1, 0, 1}), kl0101, lib);
  CHECK_FALSE(r.feasible);
  CHECK(r.certificate.kind == CertificateKind::ForcedOverflow);
  REQUIRE(r.certificate.element.has_value());
  CHECK(*r.certificate.element == s.el({0}));
  CHECK(r.certificate.forced.size() == 2);

  GroupAlgElt bad = GroupAlgElt::basis(s.el({}), -1);
  CHECK_THROWS_AS(check_lower_bound(t, s.el({}), bad, lib), InvalidInput);
  CHECK_THROWS_AS(check_lower_bound(t, s.el({}), GroupAlgElt::basis(s.el({})), CanonicalLibrary{}), InvalidInput);
  CanonicalLibrary broken = lib;
  broken.entries[s.el({1})].value = GroupAlgElt::basis(s.el({}));
  CHECK_THROWS_AS(check_lower_bound(t, s.el({0, 1, 0, 1}), paper_target(s), broken), InvalidInput);
  CHECK_THROWS_AS(check_lower_bound(t, s.el({}), GroupAlgElt::basis(s.el({})), lib), InvalidInput);
}

TEST_CASE("uncovered support gives an uncovered certificate") {
  Setup s("A1", 3);
  CanonicalLibrary lib = paper_library(s);
  GroupAlgElt far = GroupAlgElt::basis(s.el({1, 0, 1, 0}));
  auto r = check_lower_bound(*s.table, s.el({0, 1, 0, 1}), far, lib);
  CHECK_FALSE(r.feasible);
  CHECK(r.certificate.kind == CertificateKind::Uncovered);
  CHECK(*r.certificate.element == s.el({1, 0, 1, 0}));
}

TEST_CASE("branch and bound agrees with exhaustive enumeration") {
  Setup s("A2", 3);
  std::vector<AffineWeylElement> pool;
  for (const Word& w : testing_words::words_up_to(3, 2)) {
    const auto x = s.el(w);
    if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
  }
  REQUIRE(pool.size() >= 10);
  std::mt19937 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<AffineWeylElement> support(pool.begin(), pool.end());
    std::shuffle(support.begin(), support.end(), rng);
    support.resize(4 + rng() % 7);
    std::vector<GroupAlgElt> vectors(1 + rng() % 12);
    for (auto& v : vectors) {
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t j = 0; j < k; ++j) v.add(support[rng() % support.size()], 1 + static_cast<int>(rng() % 2));
    }
    GroupAlgElt target;
    if (trial % 2 == 0) {
      for (const auto& v : vectors) target += static_cast<std::int64_t>(rng() % 3) * v;
    } else {
      for (const auto& u : support)
        if (rng() % 2) target.add(u, 1 + static_cast<int>(rng() % 3));
    }
    CAPTURE(trial);
    const NonnegResult r = decompose_nonnegative(*s.g, target, vectors);
    CHECK(r.feasible == testing_oracle::exhaustive_feasible(target, vectors));
    feasible += r.feasible;
  }
  CHECK(feasible > 100);
  CHECK(feasible < 200);
}

#include <doctest.h>

#include <random>

#include "pcanon/realization.hpp"

using namespace pcanon;

namespace {

IntVector basis(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

Word random_word(std::mt19937& rng, std::size_t gens, std::size_t maxlen) {
  Word w(rng() % (maxlen + 1));
  for (auto& s : w) s = static_cast<Generator>(rng() % gens);
  return w;
}

}  // namespace

TEST_CASE("A1 generator matrices") {
  Realization rlz(AffineWeylGroup::create(build_root_datum("A1")));
  CHECK(rlz.pairing() == IntMatrix{{2, -2}, {-2, 2}});
  const IntMatrix& s0 = rlz.generator_matrix(0);
  CHECK(s0.column(0) == IntVector{-1, 0});
  CHECK(s0.column(1) == IntVector{2, 1});
  const auto x01 = rlz.group().from_word({0, 1});
  CHECK(rlz.action_matrix(x01).column(0) == IntVector{3, 2});
  CHECK(rlz.a_tilde_p(3) == IntVector{3, 2});
}

TEST_CASE("realization matrices: involutions, braid relations, fixed vector, rex independence") {
  for (std::string label : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(label);
    auto g = AffineWeylGroup::create(build_root_datum(label));
    Realization rlz(g);
    const std::size_t n = rlz.dimension();
    for (std::size_t s = 0; s < n; ++s) CHECK(rlz.pairing()(s, s) == 2);
    const IntVector vfix = rlz.v_fix();
    for (std::size_t s = 0; s < n; ++s) CHECK(dot(vfix, rlz.pairing().column(s)) == 0);
    for (Generator s = 0; s < static_cast<Generator>(n); ++s) {
      const IntMatrix& m = rlz.generator_matrix(s);
      CHECK(m * m == IntMatrix::identity(n));
      CHECK(m.apply(vfix) == vfix);
      for (Generator t = 0; t < static_cast<Generator>(n); ++t) {
        // Order of st read off the group; the matrices must satisfy the same relation.
        const auto st = g->generator(s) * g->generator(t);
        auto power = g->identity();
        IntMatrix mp = IntMatrix::identity(n);
        const IntMatrix mst = m * rlz.generator_matrix(t);
        int order = 0;
        do {
          power = power * st;
          mp = mp * mst;
          ++order;
        } while (!power.is_identity() && order < 12);
        // In affine A1 the product s~ s_1 has infinite order.
        CHECK(power.is_identity() == (mp == IntMatrix::identity(n)));
      }
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, n, 10);
      IntMatrix direct = IntMatrix::identity(n);
      for (Generator s : w) direct = direct * rlz.generator_matrix(s);
      const auto x = g->from_word(w);
      CHECK(rlz.action_matrix(x) == direct);
      // Contragredient action preserves the pairing with coroots: x(a_s^vee) pairs like a_s^vee.
      const IntMatrix dual = rlz.dual_action_matrix(x);
      const IntMatrix act = rlz.action_matrix(x);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(dot(act.apply(basis(n, i)), dual.apply(basis(n, j))) == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("rlzcoefs named examples") {
  auto g = AffineWeylGroup::create(build_root_datum("A1"));
  Realization rlz(g);
  CosetTable table(g, 3);
  auto rec = rlzcoefs_report(rlz, table, 0, 1);
  CHECK(rec.divisible);
  CHECK(rec.same_coset);
  CHECK(rec.image_matches == std::optional<bool>(true));
  rec = rlzcoefs_report(rlz, table, 2, 0);
  CHECK(rec.same_coset);
  CHECK(rec.wall_generator == std::optional<Generator>(0));
  CHECK(rec.coeff_of_a_tilde == 3);
  CHECK(rec.image_matches == std::optional<bool>(true));
  rec = rlzcoefs_report(rlz, table, 1, 0);
  CHECK(rec.coeff_of_a_tilde == -1);
  CHECK_FALSE(rec.divisible);
  CHECK_FALSE(rec.same_coset);
}

TEST_CASE("rlzcoefs is consistent on every pair") {
  for (const auto& [label, p] : std::vector<std::pair<std::string, int>>{
           {"A1", 2}, {"A1", 3}, {"A1", 5}, {"A2", 3}, {"A2", 5}, {"B2", 3}, {"G2", 5}}) {
    CAPTURE(label);
    CAPTURE(p);
    auto g = AffineWeylGroup::create(build_root_datum(label));
    Realization rlz(g);
    CosetTable table(g, p);
    for (const auto& rec : rlzcoefs_table(rlz, table)) CHECK(rec.consistent());
  }
}

TEST_CASE("point functionals match the wall functionals and are equivariant") {
  for (std::string label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    auto g = AffineWeylGroup::create(build_root_datum(label));
    Realization rlz(g);
    const std::size_t n = rlz.dimension();
    const std::int64_t k = g->scale();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      const auto x = g->from_word(random_word(rng, n, 8));
      const auto y = g->from_word(random_word(rng, n, 8));
      const IntVector point = g->scaled_alcove_point(y);
      const IntVector f = rlz.scaled_point_functional(point);
      CHECK(f[0] == g->wall_functional(0, point));
      CHECK(dot(f, rlz.v_fix()) == k);
      for (std::int64_t p : {2, 3, 5}) CHECK(dot(f, rlz.a_tilde_p(p)) == g->p_wall_functional(0, p, point));
      for (Generator s = 1; s < static_cast<Generator>(n); ++s)
        CHECK((f[static_cast<std::size_t>(s)] < 0) == (g->wall_functional(s, point) < 0));
      // <a, eps(x mu)> = <x^{-1} a, eps(mu)>
      const IntVector fx = rlz.scaled_point_functional(g->scaled_alcove_point(x * y));
      const IntMatrix xinv = rlz.action_matrix(inverse(x));
      for (std::size_t i = 0; i < n; ++i) CHECK(fx[i] == dot(xinv.apply(basis(n, i)), f));
    }
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "pcanon/error.hpp"
#include "pcanon/root_datum.hpp"

using namespace pcanon;

namespace {

// All roots (both signs) from closing the simple roots under simple reflections.
std::set<IntVector> root_orbit(const RootDatum& d) {
  const std::size_t n = d.rank();
  std::set<IntVector> seen;
  std::vector<IntVector> stack;
  for (std::size_t s = 0; s < n; ++s) {
    IntVector e(n, 0);
    e[s] = 1;
    stack.push_back(e);
    seen.insert(e);
  }
  while (!stack.empty()) {
    IntVector b = stack.back();
    stack.pop_back();
    for (std::size_t t = 0; t < n; ++t) {
      IntVector img = b;
      std::int64_t pair = 0;
      for (std::size_t u = 0; u < n; ++u) pair += b[u] * d.cartan()(u, t);
      img[t] -= pair;
      if (seen.insert(img).second) stack.push_back(img);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("built-in types have the expected Cartan data") {
  auto a1 = build_root_datum("A1");
  CHECK(a1.rank() == 1);
  CHECK(a1.cartan() == IntMatrix{{2}});
  CHECK(a1.highest_short_root_coeffs() == IntVector{1});

  auto a2 = build_root_datum("A2");
  CHECK(a2.cartan() == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(a2.highest_short_root_coeffs() == IntVector{1, 1});

  auto b2 = build_root_datum("B2");
  CHECK(b2.cartan()(0, 1) == -2);
  CHECK(b2.cartan()(1, 0) == -1);
  CHECK(b2.highest_short_root().norm == 2);
  CHECK(b2.highest_short_root_coeffs() == IntVector{1, 1});
  CHECK(b2.highest_short_coroot_coeffs() == IntVector{2, 1});
}

TEST_CASE("positive root counts and orbit closure") {
  const std::vector<std::pair<std::string, std::size_t>> counts = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4}, {"B3", 9}, {"C3", 9},
      {"B4", 16}, {"C4", 16}, {"D4", 12}, {"F4", 24}, {"G2", 6}};
  for (const auto& [label, count] : counts) {
    CAPTURE(label);
    auto d = build_root_datum(label);
    CHECK(d.positive_roots().size() == count);
    const auto orbit = root_orbit(d);
    CHECK(orbit.size() == 2 * count);
    std::set<IntVector> positives;
    for (const Root& r : d.positive_roots()) {
      positives.insert(r.coords);
      CHECK(orbit.contains(r.coords));
      IntVector neg = r.coords;
      for (auto& c : neg) c = -c;
      CHECK(orbit.contains(neg));
    }
    for (const auto& b : orbit) {
      const bool pos = std::all_of(b.begin(), b.end(), [](std::int64_t c) { return c >= 0; });
      CHECK(positives.contains(b) == pos);
    }
    for (std::size_t s = 0; s < d.rank(); ++s)
      for (std::size_t t = 0; t < d.rank(); ++t) CHECK(d.pairing_from_vectors(s, t) == d.cartan()(s, t));
    const Root& h = d.highest_short_root();
    CHECK(h.norm == 2);
    for (const Root& r : d.positive_roots()) CHECK(dot(h.coords, r.coroot_functional) >= 0);
    for (std::size_t s = 0; s < d.rank(); ++s) {
      const auto pairing = d.simple_coroot_pairing(h.coords, s);
      CHECK(pairing >= 0);
      CHECK(pairing <= 2);
    }
  }
}

TEST_CASE("positive roots are ordered by height then coordinates") {
  auto a2 = build_root_datum("A2");
  const std::vector<IntVector> expected = {{1, 0}, {0, 1}, {1, 1}};
  CHECK(positive_roots(a2) == expected);
  CHECK(positive_roots(build_root_datum("A1")) == std::vector<IntVector>{{1}});
}

TEST_CASE("explicit Cartan matrices are validated") {
  auto d = build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{2, -1}, {-1, 2}}, std::vector<std::int64_t>{2, 2}));
  CHECK(d.positive_roots().size() == 3);
  auto g2 = build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{2, -1}, {-3, 2}}));
  CHECK(g2.positive_roots().size() == 6);
  CHECK_THROWS_AS(build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{2, 0}, {0, 2}})), InvalidInput);
  CHECK_THROWS_AS(build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{2, 1}, {1, 2}})), InvalidInput);
  CHECK_THROWS_AS(build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{2, -2}, {-2, 2}})), InvalidInput);
  CHECK_THROWS_AS(build_root_datum(RootDatumSpec::of_matrix(IntMatrix{{3}})), InvalidInput);
  CHECK_THROWS_AS(build_root_datum("E8"), InvalidInput);
  CHECK_THROWS_AS(build_root_datum("A"), InvalidInput);
}

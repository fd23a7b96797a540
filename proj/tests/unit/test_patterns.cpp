#include <doctest.h>

#include <set>

#include "pcanon/patterns.hpp"

using namespace pcanon;

namespace {

std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t s = 0; s < k; ++s) {
        Word ws = w;
        ws.push_back(static_cast<Generator>(s));
        next.push_back(ws);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("subsequences and defects") {
  auto a1 = AffineWeylGroup::create(build_root_datum("A1"));
  const auto subs = subsequences(2);
  CHECK(subs == std::vector<Subsequence>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(defect(*a1, {1}, {0}) == 1);
  CHECK(defect(*a1, {1, 1}, {0, 0}) == 2);
  CHECK(defect(*a1, {1, 1}, {1, 0}) == -1);
  CHECK(defect(*a1, {0, 1, 0}, {1, 1, 0}) == 1);
}

TEST_CASE("the worked A2 stroll") {
  auto a2 = AffineWeylGroup::create(build_root_datum("A2"));
  Pattern r{{0, 1, 2, 0, 2, 1, 0, 1}, Pattern::parse_types("1**1111*")};
  CHECK(r.type_string() == "1**1111*");
  Match c{r, Match::parse_types("-01----0")};
  CHECK(c.type_string() == "-01----0");
  const auto dm = twisted_stroll(*a2, c, a2->generator(0));
  const auto id = a2->identity();
  const auto two = a2->generator(2);
  CHECK(dm.stroll == std::vector<AffineWeylElement>{id, id, id, two, two, two, two, two, two});
  std::string deco;
  for (auto d : dm.decorations) deco += to_string(d) + " ";
  CHECK(deco == "-1 U0 U1 -1 -1 -1 -1 D0 ");
  CHECK(dm.defect == 0);

  Match empty{Pattern{}, {}};
  const auto de = twisted_stroll(*a2, empty, a2->generator(1));
  CHECK(de.stroll == std::vector<AffineWeylElement>{id});
  CHECK(de.defect == 0);
}

TEST_CASE("untwisted all-indeterminate strolls give the Deodhar defect") {
  for (std::string label : {"A1", "A2"}) {
    auto g = AffineWeylGroup::create(build_root_datum(label));
    const std::size_t maxlen = label == "A1" ? 7 : 5;
    for (std::size_t len = 0; len <= maxlen; ++len)
      for (const Word& w : all_words(g->num_generators(), len)) {
        Pattern r{w, std::vector<TermType>(len, TermType::Star)};
        for (const Match& c : matches(r)) {
          const auto e = c.subsequence();
          const auto dm = twisted_stroll(*g, c, g->identity());
          CHECK(dm.defect == defect(*g, w, e));
          CHECK(dm.kept == subsequence_element(*g, w, e));
        }
      }
  }
}

TEST_CASE("pattern sets partition the subsequences") {
  auto a1 = AffineWeylGroup::create(build_root_datum("A1"));
  CosetTable t3(a1, 3);
  auto ps = patterns_star(t3, {}, 1);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].size() == 0);
  ps = patterns_star(t3, {0}, 0);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].type_string() == "0");
  CHECK(ps[1].type_string() == "1");
  ps = patterns_star(t3, {0}, 2);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].type_string() == "*");

  for (const auto& [label, p, maxlen] : std::vector<std::tuple<std::string, int, std::size_t>>{
           {"A1", 3, 8}, {"A1", 2, 6}, {"A2", 3, 5}, {"B2", 3, 4}}) {
    CAPTURE(label);
    auto g = AffineWeylGroup::create(build_root_datum(label));
    CosetTable table(g, p);
    for (std::size_t len = 0; len <= maxlen; ++len)
      for (const Word& w : all_words(g->num_generators(), len))
        for (std::size_t z = 0; z < table.size(); ++z) {
          const auto pats = patterns_star(table, w, z);
          std::vector<int> hits(std::size_t{1} << len, 0);
          std::size_t branching = 0;
          for (const Pattern& r : pats) {
            branching = std::max(branching, len - r.indeterminate_count());
            for (const Match& c : matches(r)) {
              const auto e = c.subsequence();
              std::size_t code = 0;
              for (auto b : e) code = code * 2 + b;
              ++hits[code];
            }
            // Indeterminate positions are exactly the stay steps along the pattern.
            std::size_t cur = z;
            for (std::size_t i = 0; i < len; ++i) {
              CHECK(table.stays(cur, w[i]) == (r.types[i] == TermType::Star));
              if (r.types[i] == TermType::One) cur = table.act(cur, w[i]);
            }
          }
          CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
          std::set<std::string> names;
          for (const Pattern& r : pats) names.insert(r.type_string());
          CHECK(names.size() == pats.size());
        }
  }
}

TEST_CASE("past patterns put the S_p prefix first") {
  auto a1 = AffineWeylGroup::create(build_root_datum("A1"));
  CosetTable t3(a1, 3);
  auto ps = patterns_past(t3, {}, {0, 1});
  auto star = patterns_star(t3, {0, 1}, 0);
  REQUIRE(ps.size() == star.size());
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(ps[i].types == star[i].types);
  ps = patterns_past(t3, {0, 1}, {});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].type_string() == "**");
  CHECK(matches(ps[0]).size() == 4);
  CHECK(term_generator(*a1, ps[0], 0) == a1->p_generator(0, 3));
  ps = patterns_past(t3, {0}, {1});
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].type_string() == "**");
}

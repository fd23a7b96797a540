#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pcanon/diagram.hpp"
#include "pcanon/error.hpp"
#include "pcanon/io.hpp"

using namespace pcanon;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json load(const std::string& name) {
  return nlohmann::json::parse(slurp(std::string(PCANON_SOURCE_DIR) + "/data/" + name));
}

}  // namespace

TEST_CASE("words and elements round-trip through JSON") {
  auto g = AffineWeylGroup::create(build_root_datum("A2"));
  CHECK(parse_word("0,1,2") == Word{0, 1, 2});
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("e") == Word{});
  CHECK_THROWS_AS(parse_word("0,,1"), InvalidInput);
  CHECK_THROWS_AS(parse_word("1a"), InvalidInput);

  for (const Word& w : std::vector<Word>{{}, {0}, {1, 2, 1}, {0, 1, 2, 0, 2, 1, 0, 1}}) {
    const auto x = g->from_word(w);
    CHECK(element_from_json(*g, element_to_json(*g, x)) == x);
    nlohmann::json m{{"matrix", nlohmann::json::array()}, {"translation", x.translation}};
    for (std::size_t i = 0; i < x.linear.rows(); ++i) {
      std::vector<std::int64_t> row(x.linear.row(i).begin(), x.linear.row(i).end());
      m["matrix"].push_back(row);
    }
    CHECK(element_from_json(*g, m) == x);
  }
  CHECK(element_from_json(*g, nlohmann::json{{"word", {1, 1}}}) == g->identity());
  CHECK_THROWS_AS(element_from_json(*g, nlohmann::json{{"matrix", {{2, 0}, {0, 1}}}, {"translation", {0, 0}}}),
                  InvalidInput);
  CHECK_THROWS_AS(element_from_json(*g, nlohmann::json{{"word", {3}}}), InvalidInput);

  const RootDatumSpec spec = root_datum_spec_from_json(nlohmann::json::parse(R"({"cartan":[[2,-1],[-1,2]]})"));
  CHECK(build_root_datum(spec).positive_roots().size() == 3);
}

TEST_CASE("algebra values round-trip through JSON") {
  auto g = AffineWeylGroup::create(build_root_datum("A1"));
  const HeckeElt h = kl_product(*g, {0, 1, 0});
  CHECK(hecke_from_json(*g, hecke_to_json(*g, h)) == h);
  const auto parsed = hecke_from_json(*g, nlohmann::json::parse(R"([{"word":[0,1],"coeff":{"0":1,"1":1}}])"));
  CHECK(parsed == HeckeElt::basis(g->from_word({0, 1}), LaurentPoly(1) + LaurentPoly::v()));

  const GroupAlgElt t = v1_specialize(h);
  CHECK(group_alg_from_json(*g, group_alg_to_json(*g, t)) == t);

  CosetTable table(g, 3);
  StarHeckeElt a = star_kl_gen(table, 0);
  a += star_mul(table, star_kl_gen(table, 1), star_kl_gen(table, 0));
  CHECK(star_hecke_from_json(table, star_hecke_to_json(table, a)) == a);
  CHECK_THROWS_AS(star_hecke_from_json(table, nlohmann::json::parse(R"([{"word":[0],"coeff":[1]}])")), DatumMismatch);

  const CanonicalLibrary lib = library_from_json(*g, load("a1_p3_library.json"));
  CHECK(lib.entries.size() == 3);
  const CanonicalLibrary again = library_from_json(*g, library_to_json(*g, lib, "A1"));
  CHECK(again.entries.size() == 3);
  for (const auto& [y, e] : lib.entries) CHECK(again.entries.at(y).value == e.value);
}

TEST_CASE("weight diagram of the worked example") {
  auto g = AffineWeylGroup::create(build_root_datum("A1"));
  const auto target = group_alg_from_json(*g, load("a1_p3_target_010_1.json").at("v1"));
  const WeightDiagram d = build_weight_diagram(*g, target);
  CHECK(d.total() == 12);
  CHECK(d.total() == target.mass());
  std::vector<std::string> labels;
  std::vector<std::int64_t> counts;
  for (const auto& c : d.cells) {
    labels.push_back(c.label);
    counts.push_back(c.count);
  }
  CHECK(labels == std::vector<std::string>{"101", "10", "1", "e", "0", "01", "010", "0101"});
  CHECK(counts == std::vector<std::int64_t>{1, 1, 2, 2, 2, 2, 1, 1});

  const std::string svg = render_svg(d);
  CHECK(svg == slurp(std::string(PCANON_SOURCE_DIR) + "/tests/golden/a1_weight_diagram.svg"));
  CHECK(render_svg(build_weight_diagram(*g, target)) == svg);
  std::size_t dots = 0;
  for (std::size_t pos = 0; (pos = svg.find("<circle", pos)) != std::string::npos; ++pos) ++dots;
  CHECK(dots == 12);

  const WeightDiagram single = build_weight_diagram(*g, GroupAlgElt::basis(g->identity()));
  REQUIRE(single.cells.size() == 1);
  CHECK(single.cells[0].label == "e");
  CHECK(single.total() == 1);
  const WeightDiagram empty = build_weight_diagram(*g, GroupAlgElt());
  CHECK(empty.total() == 0);
  CHECK(render_svg(empty).find("<circle") == std::string::npos);
  CHECK_THROWS_AS(build_weight_diagram(*g, GroupAlgElt::basis(g->identity(), -1)), InvalidInput);

  DiagramColoring bad{{"only"}, {GroupAlgElt::basis(g->identity())}};
  CHECK_THROWS_AS(build_weight_diagram(*g, target, &bad), InvalidInput);
}

TEST_CASE("witness coloring and other ranks") {
  auto g = AffineWeylGroup::create(build_root_datum("A1"));
  CosetTable table(g, 3);
  const auto target = group_alg_from_json(*g, load("a1_p3_target_010_1.json").at("v1"));
  const auto lib = library_from_json(*g, load("a1_p3_library.json"));
  const BoundResult r = check_lower_bound(table, g->from_word({0, 1, 0, 1}), target, lib);
  REQUIRE(r.feasible);
  const DiagramColoring coloring = coloring_from_witness(table, r);
  const WeightDiagram d = build_weight_diagram(*g, target, &coloring);
  CHECK(d.legend.size() == 5);
  for (const auto& c : d.cells) {
    CHECK(c.colors.size() == static_cast<std::size_t>(c.count));
    for (int k : c.colors) CHECK(k >= 0);
  }
  CHECK(render_text(d).find("a: ") != std::string::npos);

  auto a2 = AffineWeylGroup::create(build_root_datum("A2"));
  const GroupAlgElt t2 = v1_specialize(kl_product(*a2, {0, 1, 2}));
  const WeightDiagram d2 = build_weight_diagram(*a2, t2);
  CHECK(d2.total() == t2.mass());
  const std::string svg2 = render_svg(d2);
  CHECK(svg2.find("<polygon") != std::string::npos);

  auto a3 = AffineWeylGroup::create(build_root_datum("A3"));
  const WeightDiagram d3 = build_weight_diagram(*a3, v1_specialize(kl_product(*a3, {0, 1})));
  CHECK_THROWS_AS(render_svg(d3), InvalidInput);
  CHECK(render_json(*a3, d3).at("total") == 4);
}

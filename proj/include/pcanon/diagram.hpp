#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pcanon/group_alg.hpp"
#include "pcanon/recursion.hpp"

namespace pcanon {

struct DiagramCell {
  AffineWeylElement x;
  std::string label;
  std::int64_t count = 0;
  /// Part index of each dot, or -1 when uncolored.
  std::vector<int> colors;
  std::vector<std::vector<double>> vertices;
};

/// One marker per unit coefficient, placed in the alcove of its element.
/// Rank-1 cells run left to right along the line; otherwise they are in
/// canonical order.
struct WeightDiagram {
  std::size_t rank = 0;
  std::vector<std::vector<double>> embedding;  ///< simple roots in the plane
  std::vector<DiagramCell> cells;
  std::vector<std::string> legend;

  std::int64_t total() const;
};

/// Optional split of the element into colored parts that sum to it.
struct DiagramColoring {
  std::vector<std::string> labels;
  std::vector<GroupAlgElt> parts;
};

DiagramColoring coloring_from_witness(const CosetTable& table, const BoundResult& r);

/// Throws InvalidInput on negative coefficients or a coloring that does not sum to t.
WeightDiagram build_weight_diagram(const AffineWeylGroup& g, const GroupAlgElt& t,
                                   const DiagramColoring* coloring = nullptr);

/// Rank 1: the alcove line with stacked dots. Other ranks: one line per alcove.
std::string render_text(const WeightDiagram& d);
/// Rank <= 2 only; throws InvalidInput otherwise.
std::string render_svg(const WeightDiagram& d);
nlohmann::json render_json(const AffineWeylGroup& g, const WeightDiagram& d);

}  // namespace pcanon

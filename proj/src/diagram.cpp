#include "pcanon/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "pcanon/error.hpp"
#include "pcanon/io.hpp"

namespace pcanon {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr const char* kInk = "#222222";
constexpr double kUnit = 80.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

const char* color_of(int part) {
  return part < 0 ? kInk : kPalette[static_cast<std::size_t>(part) % (sizeof kPalette / sizeof *kPalette)];
}

std::vector<std::vector<double>> plane_embedding(const RootDatum& datum) {
  const auto& gram = datum.gram();
  const std::size_t n = datum.rank();
  std::vector<std::vector<double>> out;
  if (n == 0 || n > 2) return out;
  const double g11 = static_cast<double>(gram(0, 0));
  out.push_back({std::sqrt(g11), 0.0});
  if (n == 2) {
    const double g12 = static_cast<double>(gram(0, 1)), g22 = static_cast<double>(gram(1, 1));
    out.push_back({g12 / std::sqrt(g11), std::sqrt(g22 - g12 * g12 / g11)});
  }
  return out;
}

// Plane coordinates with the y axis pointing down, as SVG expects.
std::pair<double, double> to_plane(const WeightDiagram& d, const std::vector<double>& mu) {
  double x = 0, y = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    x += mu[i] * d.embedding[i][0];
    y += mu[i] * d.embedding[i][1];
  }
  return {kUnit * x, -kUnit * y};
}

}  // namespace

std::int64_t WeightDiagram::total() const {
  std::int64_t n = 0;
  for (const auto& c : cells) n += c.count;
  return n;
}

DiagramColoring coloring_from_witness(const CosetTable& table, const BoundResult& r) {
  const AffineWeylGroup& g = table.group();
  DiagramColoring out;
  for (const auto& term : r.witness) {
    for (const auto& v : r.vectors)
      if (v.y == term.y && v.w == term.w) out.parts.push_back(term.multiplicity * v.value);
    out.labels.push_back("y=" + element_label(g, term.y) + " w=" + element_label(g, table.rep(term.w)) + " x" +
                         std::to_string(term.multiplicity));
  }
  return out;
}

WeightDiagram build_weight_diagram(const AffineWeylGroup& g, const GroupAlgElt& t, const DiagramColoring* coloring) {
  if (!t.nonnegative()) throw InvalidInput("weight diagrams need nonnegative coefficients");
  WeightDiagram d;
  d.rank = g.rank();
  d.embedding = plane_embedding(g.datum());
  if (coloring) {
    if (coloring->parts.size() != coloring->labels.size()) throw InvalidInput("coloring labels and parts differ in number");
    GroupAlgElt sum;
    for (const auto& part : coloring->parts) {
      if (!part.nonnegative()) throw InvalidInput("coloring parts must be nonnegative");
      sum += part;
    }
    if (sum != t) throw InvalidInput("coloring does not sum to the element");
    d.legend = coloring->labels;
  }
  for (const auto& [x, c] : t.terms()) {
    DiagramCell cell;
    cell.x = x;
    cell.label = element_label(g, x);
    cell.count = c;
    cell.vertices = g.alcove_vertices(x);
    if (coloring) {
      for (std::size_t i = 0; i < coloring->parts.size(); ++i)
        cell.colors.insert(cell.colors.end(), static_cast<std::size_t>(coloring->parts[i].coeff(x)), static_cast<int>(i));
    } else {
      cell.colors.assign(static_cast<std::size_t>(c), -1);
    }
    d.cells.push_back(std::move(cell));
  }
  if (d.rank == 1) {
    std::sort(d.cells.begin(), d.cells.end(), [](const DiagramCell& a, const DiagramCell& b) {
      return a.vertices[0][0] + a.vertices[1][0] < b.vertices[0][0] + b.vertices[1][0];
    });
  } else {
    std::sort(d.cells.begin(), d.cells.end(),
              [&](const DiagramCell& a, const DiagramCell& b) { return g.canonical_less(a.x, b.x); });
  }
  return d;
}

std::string render_text(const WeightDiagram& d) {
  std::string out;
  if (d.rank != 1) {
    for (const auto& c : d.cells) out += c.label + ": " + std::to_string(c.count) + "\n";
    return out;
  }
  std::size_t width = 1;
  std::int64_t height = 0;
  for (const auto& c : d.cells) {
    width = std::max(width, c.label.size());
    height = std::max(height, c.count);
  }
  width += 2;
  auto centered = [&](const std::string& s) {
    const std::size_t left = (width - s.size()) / 2;
    return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
  };
  for (std::int64_t level = height; level >= 1; --level) {
    std::string line = " ";
    for (const auto& c : d.cells) {
      std::string mark = " ";
      if (c.count >= level) {
        const int part = c.colors[static_cast<std::size_t>(level - 1)];
        mark = part < 0 ? "o" : std::string(1, static_cast<char>('a' + part % 26));
      }
      line += centered(mark) + " ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  std::string rule = "|", labels = "|";
  for (const auto& c : d.cells) {
    rule += std::string(width, '-') + "|";
    labels += centered(c.label) + "|";
  }
  out += rule + "\n" + labels + "\n";
  for (std::size_t i = 0; i < d.legend.size(); ++i)
    out += std::string(1, static_cast<char>('a' + i % 26)) + ": " + d.legend[i] + "\n";
  return out;
}

std::string render_svg(const WeightDiagram& d) {
  if (d.rank > 2) throw InvalidInput("SVG weight diagrams need rank at most 2");
  constexpr double r = 5.0, step = 13.0;
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest(), max_y = max_x;
  auto extend = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };

  std::string body;
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    const DiagramCell& c = d.cells[i];
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : c.vertices) pts.push_back(to_plane(d, v));
    double cx = 0, cy = 0;
    for (const auto& [x, y] : pts) {
      cx += x / static_cast<double>(pts.size());
      cy += y / static_cast<double>(pts.size());
    }
    body += "  <g id=\"alcove-" + c.label + "\">\n    <title>" + c.label + ": " + std::to_string(c.count) + "</title>\n";
    if (d.rank == 1) {
      const double x0 = std::min(pts[0].first, pts[1].first), x1 = std::max(pts[0].first, pts[1].first);
      body += "    <line x1=\"" + num(x0) + "\" y1=\"0.00\" x2=\"" + num(x1) + "\" y2=\"0.00\" stroke=\"" + kInk +
              "\" stroke-width=\"2\"/>\n";
      for (double x : {x0, x1})
        body += "    <line x1=\"" + num(x) + "\" y1=\"-4.00\" x2=\"" + num(x) + "\" y2=\"4.00\" stroke=\"" + kInk +
                "\" stroke-width=\"1\"/>\n";
      body += "    <text x=\"" + num(cx) + "\" y=\"20.00\" font-size=\"11\" text-anchor=\"middle\">" + c.label +
              "</text>\n";
      extend(x0, 24.0);
      extend(x1, 0.0);
      for (std::size_t k = 0; k < c.colors.size(); ++k) {
        const double y = -12.0 - step * static_cast<double>(k);
        body += "    <circle id=\"dot-" + c.label + "-" + std::to_string(k) + "\" cx=\"" + num(cx) + "\" cy=\"" +
                num(y) + "\" r=\"" + num(r) + "\" fill=\"" + color_of(c.colors[k]) + "\"/>\n";
        extend(cx, y - r);
      }
    } else {
      std::string points;
      for (const auto& [x, y] : pts) {
        points += (points.empty() ? "" : " ") + num(x) + "," + num(y);
        extend(x, y);
      }
      body += "    <polygon points=\"" + points + "\" fill=\"none\" stroke=\"" + kInk + "\" stroke-width=\"1\"/>\n";
      const std::size_t n = c.colors.size(), cols = std::min<std::size_t>(n, 3);
      const std::size_t rows = (n + 2) / 3;
      for (std::size_t k = 0; k < n; ++k) {
        const double x = cx + (static_cast<double>(k % 3) - (static_cast<double>(cols) - 1) / 2) * 8.0;
        const double y = cy + (static_cast<double>(k / 3) - (static_cast<double>(rows) - 1) / 2) * 8.0;
        body += "    <circle id=\"dot-" + c.label + "-" + std::to_string(k) + "\" cx=\"" + num(x) + "\" cy=\"" +
                num(y) + "\" r=\"3.00\" fill=\"" + color_of(c.colors[k]) + "\"/>\n";
      }
    }
    body += "  </g>\n";
  }
  if (d.cells.empty()) {
    min_x = min_y = -20;
    max_x = max_y = 20;
  }
  double legend_y = max_y + 24;
  for (std::size_t i = 0; i < d.legend.size(); ++i) {
    body += "  <g id=\"legend-" + std::to_string(i) + "\">\n    <circle cx=\"" + num(min_x + 6) + "\" cy=\"" +
            num(legend_y - 4) + "\" r=\"" + num(r) + "\" fill=\"" + color_of(static_cast<int>(i)) +
            "\"/>\n    <text x=\"" + num(min_x + 16) + "\" y=\"" + num(legend_y) + "\" font-size=\"11\">" +
            d.legend[i] + "</text>\n  </g>\n";
    extend(min_x + 200, legend_y + 4);
    legend_y += 16;
  }
  const double margin = 12;
  const std::string view = num(min_x - margin) + " " + num(min_y - margin) + " " + num(max_x - min_x + 2 * margin) +
                           " " + num(max_y - min_y + 2 * margin);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + view + "\" font-family=\"sans-serif\">\n" + body +
         "</svg>\n";
}

nlohmann::json render_json(const AffineWeylGroup& g, const WeightDiagram& d) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : d.cells)
    cells.push_back({{"word", g.canonical_rex(c.x)}, {"label", c.label}, {"count", c.count}, {"colors", c.colors}});
  return {{"rank", d.rank}, {"total", d.total()}, {"cells", cells}, {"legend", d.legend}};
}

}  // namespace pcanon

#include "eigensteps/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace eigensteps {

namespace {

struct Point2 {
  double x = 0;
  double y = 0;
};

int label_rank(const ConditionId& id) {
  switch (id.kind) {
    case ConditionKind::lower_bound:
      return 0;
    case ConditionKind::upper_bound:
      return 2;
    default:
      return 1;
  }
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Point2 coords(const FreeCoordinates& chart, const Tableau& t) {
  const auto x = chart.coordinates(t);
  return {to_double(x[0]), to_double(x[1])};
}

std::string cell_label(const Cell& c) {
  return "&#955;<tspan baseline-shift=\"sub\" font-size=\"10\">" + std::to_string(c.i) + "," + std::to_string(c.n) +
         "</tspan>";
}

/// Segment of a.x = b inside the box, if any.
std::vector<Point2> clip_line(double a0, double a1, double b, double x0, double x1, double y0, double y1) {
  std::vector<Point2> hits;
  const auto add = [&](Point2 q) {
    const double eps = 1e-9;
    if (q.x < x0 - eps || q.x > x1 + eps || q.y < y0 - eps || q.y > y1 + eps) return;
    for (const auto& h : hits) {
      if (std::abs(h.x - q.x) < eps && std::abs(h.y - q.y) < eps) return;
    }
    hits.push_back(q);
  };
  if (a1 != 0) {
    add({x0, (b - a0 * x0) / a1});
    add({x1, (b - a0 * x1) / a1});
  }
  if (a0 != 0) {
    add({(b - a1 * y0) / a0, y0});
    add({(b - a1 * y1) / a0, y1});
  }
  if (hits.size() > 2) hits.resize(2);
  return hits;
}

}  // namespace

std::vector<ConditionId> plot_label_order(const Params& p) {
  auto ids = facet_inequalities(p);
  std::stable_sort(ids.begin(), ids.end(), [](const ConditionId& a, const ConditionId& b) {
    if (label_rank(a) != label_rank(b)) return label_rank(a) < label_rank(b);
    if (label_rank(a) != 1) return false;
    if (*a.i != *b.i) return *a.i > *b.i;
    if (*a.n != *b.n) return *a.n < *b.n;
    return a.kind == ConditionKind::horizontal && b.kind == ConditionKind::diagonal;
  });
  return ids;
}

std::string plot2d_svg(const Params& p) {
  if (dimension(p) != 2) {
    throw DomainError("plot2d needs a two-dimensional polytope (got dimension " + std::to_string(dimension(p)) + ")");
  }
  const FreeCoordinates chart(p);
  const HRep h = h_representation(p, HRepVariant::non_redundant);
  const auto labels = plot_label_order(p);

  std::vector<Point2> polygon;
  for (const auto& v : enumerate_vertices(p, 64)) polygon.push_back(coords(chart, v.tableau));
  Point2 centre;
  for (const auto& q : polygon) {
    centre.x += q.x / static_cast<double>(polygon.size());
    centre.y += q.y / static_cast<double>(polygon.size());
  }
  std::sort(polygon.begin(), polygon.end(), [&](const Point2& a, const Point2& b) {
    return std::atan2(a.y - centre.y, a.x - centre.x) < std::atan2(b.y - centre.y, b.x - centre.x);
  });

  struct Marked {
    std::string name;
    Point2 at;
  };
  std::vector<Marked> marks{{"&#955;&#770;", coords(chart, special_point(p))}};
  for (std::size_t k = 0; k < labels.size(); ++k) {
    marks.push_back({"P" + std::to_string(k + 1), coords(chart, witness_point(p, labels[k]))});
  }

  double x0 = marks.front().at.x, x1 = x0, y0 = marks.front().at.y, y1 = y0;
  const auto grow = [&](const Point2& q) {
    x0 = std::min(x0, q.x);
    x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y);
    y1 = std::max(y1, q.y);
  };
  for (const auto& q : polygon) grow(q);
  for (const auto& m : marks) grow(m.at);
  x0 -= 1.5;
  x1 += 1.5;
  y0 -= 1.5;
  y1 += 1.5;

  const double scale = 60;
  const double margin = 40;
  const double width = (x1 - x0) * scale + 2 * margin;
  const double height = (y1 - y0) * scale + 2 * margin;
  const auto px = [&](double x) { return margin + (x - x0) * scale; };
  const auto py = [&](double y) { return margin + (y1 - y) * scale; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\" font-family=\"serif\" font-size=\"14\">\n";
  svg += "<title>Lambda_{" + std::to_string(p.N) + "," + std::to_string(p.d) + "} in free coordinates</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";

  svg += "<polygon fill=\"#dde8f4\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < polygon.size(); ++k) {
    if (k > 0) svg += ' ';
    svg += num(px(polygon[k].x)) + "," + num(py(polygon[k].y));
  }
  svg += "\"/>\n";

  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto it = std::find_if(h.inequalities.begin(), h.inequalities.end(),
                                 [&](const HalfSpace& half) { return half.id == labels[k]; });
    const auto seg = clip_line(to_double(it->coeffs[0]), to_double(it->coeffs[1]), to_double(it->rhs), x0, x1, y0, y1);
    if (seg.size() < 2) continue;
    svg += "<line x1=\"" + num(px(seg[0].x)) + "\" y1=\"" + num(py(seg[0].y)) + "\" x2=\"" + num(px(seg[1].x)) +
           "\" y2=\"" + num(py(seg[1].y)) + "\" stroke=\"#555555\" stroke-dasharray=\"6,4\"/>\n";
    const Point2 mid{(seg[0].x + seg[1].x) / 2, (seg[0].y + seg[1].y) / 2};
    svg += "<text x=\"" + num(px(mid.x) + 6) + "\" y=\"" + num(py(mid.y) - 6) + "\" fill=\"#555555\">H" +
           std::to_string(k + 1) + "</text>\n";
  }

  for (const auto& m : marks) {
    svg += "<circle cx=\"" + num(px(m.at.x)) + "\" cy=\"" + num(py(m.at.y)) + "\" r=\"4\" fill=\"#b22222\"/>\n";
    svg += "<text x=\"" + num(px(m.at.x) + 7) + "\" y=\"" + num(py(m.at.y) + 16) + "\">" + m.name + "</text>\n";
  }

  const auto& cells = chart.free_cells();
  svg += "<text x=\"" + num(width - margin) + "\" y=\"" + num(height - 8) + "\" text-anchor=\"end\">" +
         cell_label(cells[0]) + "</text>\n";
  svg += "<text x=\"8\" y=\"" + num(margin - 12) + "\">" + cell_label(cells[1]) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace eigensteps

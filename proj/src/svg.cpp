#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutting_detail.hpp"
#include "primwords/cutting.hpp"

namespace primwords {

namespace {

constexpr double kCanvas = 512.0;
constexpr double kMargin = 32.0;
constexpr double kSquare = kCanvas - 2 * kMargin;

constexpr const char* kVerticalColor = "#1f77b4";
constexpr const char* kHorizontalColor = "#2ca02c";
constexpr const char* kCornerColor = "#ff7f0e";
constexpr const char* kCrossingColor = "#d62728";

struct Point {
  double x;
  double y;
};

struct Segment {
  Point from;
  Point to;
};

Point on_side(Side side, double t) {
  switch (side) {
    case Side::A: return {0.0, t};
    case Side::ABar: return {1.0, t};
    case Side::B: return {t, 0.0};
    case Side::BBar: return {t, 1.0};
  }
  return {0.0, 0.0};
}

// Position of each crossing along its side. Simple words use the exact line
// through the square; other words spread crossings in order of occurrence.
std::vector<double> crossing_positions(const StrandDiagram& d) {
  const Word& w = d.word;
  const std::size_t n = w.size();
  std::vector<double> pos(n, 0.5);
  if (d.simple) {
    const auto img = abelianize(w);
    const std::int64_t p = img.b_sum < 0 ? -img.b_sum : img.b_sum;
    const std::int64_t q = img.a_sum < 0 ? -img.a_sum : img.a_sum;
    if (p == 0 || q == 0) return pos;
    const bool flip_a = img.a_sum < 0;
    const bool flip_b = img.b_sum < 0;
    const auto cs = detail::line_crossings(p, q);
    const Word base = detail::crossings_word(cs, 0);
    const auto r = find_rotation(base, substitute(w, flip_a, flip_b));
    if (r) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = cs[(k + *r) % n];
        double t = detail::crossing_position(c, p, q);
        // Mirror the picture for inverted generators: a reflects x, b reflects y.
        if ((c.gen == Generator::A && flip_b) || (c.gen == Generator::B && flip_a)) t = 1.0 - t;
        pos[k] = t;
      }
      return pos;
    }
  }
  const std::size_t n_a = count(w, Generator::A);
  const std::size_t n_b = n - n_a;
  std::size_t seen_a = 0;
  std::size_t seen_b = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k].gen == Generator::A) {
      pos[k] = (static_cast<double>(seen_a++) + 0.5) / static_cast<double>(n_a);
    } else {
      pos[k] = (static_cast<double>(seen_b++) + 0.5) / static_cast<double>(n_b);
    }
  }
  return pos;
}

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::optional<Point> proper_intersection(const Segment& s, const Segment& t) {
  const double d1 = cross(s.from, s.to, t.from);
  const double d2 = cross(s.from, s.to, t.to);
  const double d3 = cross(t.from, t.to, s.from);
  const double d4 = cross(t.from, t.to, s.to);
  constexpr double eps = 1e-12;
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))) {
    const double u = d3 / (d3 - d4);
    return Point{s.from.x + u * (s.to.x - s.from.x), s.from.y + u * (s.to.y - s.from.y)};
  }
  return std::nullopt;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double px(double x) { return kMargin + kSquare * x; }
double py(double y) { return kMargin + kSquare * (1.0 - y); }

const char* color_of(StrandKind k) {
  switch (k) {
    case StrandKind::Vertical: return kVerticalColor;
    case StrandKind::Horizontal: return kHorizontalColor;
    case StrandKind::Corner: return kCornerColor;
  }
  return "#000000";
}

}  // namespace

std::string emit_svg(const StrandDiagram& d) {
  const std::size_t n = d.strands.size();
  const auto pos = crossing_positions(d);
  std::vector<Segment> segments;
  segments.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Strand& s = d.strands[k];
    segments.push_back({on_side(s.entry_side, pos[k]), on_side(s.exit_side, pos[(k + 1) % n])});
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" "
         "viewBox=\"0 0 512 512\">\n";
  out += "<title>strands of " + (d.word.empty() ? std::string("identity") : d.word.str()) + "</title>\n";
  out += "<rect x=\"32\" y=\"32\" width=\"448\" height=\"448\" fill=\"none\" stroke=\"#000000\" "
         "stroke-width=\"2\"/>\n";
  out += "<g font-family=\"serif\" font-size=\"20\" text-anchor=\"middle\">\n";
  out += "<text x=\"16\" y=\"262\">A</text>\n";
  out += "<text x=\"496\" y=\"262\">A&#x304;</text>\n";
  out += "<text x=\"256\" y=\"504\">B</text>\n";
  out += "<text x=\"256\" y=\"24\">B&#x304;</text>\n";
  out += "</g>\n";
  out += "<g stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (std::size_t k = 0; k < n; ++k) {
    const Strand& s = d.strands[k];
    const Segment& seg = segments[k];
    out += "<line class=\"" + std::string(strand_kind_name(s.kind)) + "\" x1=\"" + fmt(px(seg.from.x)) +
           "\" y1=\"" + fmt(py(seg.from.y)) + "\" x2=\"" + fmt(px(seg.to.x)) + "\" y2=\"" + fmt(py(seg.to.y)) +
           "\" stroke=\"" + color_of(s.kind) + "\"/>\n";
  }
  out += "</g>\n";
  if (!d.simple) {
    out += "<g fill=\"" + std::string(kCrossingColor) + "\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (const auto hit = proper_intersection(segments[i], segments[j])) {
          out += "<circle class=\"crossing\" cx=\"" + fmt(px(hit->x)) + "\" cy=\"" + fmt(py(hit->y)) +
                 "\" r=\"5\"/>\n";
        }
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string diagram_json(const StrandDiagram& d) {
  nlohmann::ordered_json j;
  j["word"] = d.word.str();
  j["simple"] = d.simple;
  j["counts"] = {{"vertical", d.counts.vertical}, {"horizontal", d.counts.horizontal}, {"corner", d.counts.corner}};
  auto strands = nlohmann::ordered_json::array();
  for (const auto& s : d.strands) {
    strands.push_back({{"index", s.index},
                       {"kind", strand_kind_name(s.kind)},
                       {"corner_type", corner_type_name(s.corner_type)},
                       {"entry_side", side_name(s.entry_side)},
                       {"exit_side", side_name(s.exit_side)}});
  }
  j["strands"] = std::move(strands);
  return j.dump();
}

}  // namespace primwords

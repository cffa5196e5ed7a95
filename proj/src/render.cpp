#include "octocf/render.hpp"

#include <algorithm>
#include <sstream>

namespace octocf::render {

namespace {

constexpr std::size_t kDigits = 12;

std::string num(const QuadNum& q) { return to_decimal(q, kDigits); }

const QuadNum& qmin(const QuadNum& a, const QuadNum& b) { return qsign(a - b) <= 0 ? a : b; }
const QuadNum& qmax(const QuadNum& a, const QuadNum& b) { return qsign(a - b) >= 0 ? a : b; }

struct Box {
  QuadNum x0, y0, x1, y1;
  void add(const Vec2& p) {
    x0 = qmin(x0, p.x);
    y0 = qmin(y0, p.y);
    x1 = qmax(x1, p.x);
    y1 = qmax(y1, p.y);
  }
};

// Quadrilateral i as the closed path 0, w_r, w_d, w_l.
std::vector<Vec2> corners(const diagch::LabeledQuadrangulation& q, std::size_t i) {
  return {Vec2{0, 0}, q.right(i), diagch::diagonal(q, i), q.left(i)};
}

struct Layout {
  std::vector<QuadNum> offsets;  // horizontal shift of each quadrilateral
  Box box;
};

Layout layout(const diagch::LabeledQuadrangulation& q, const QuadNum& gap) {
  Layout l{{}, {QuadNum(0), QuadNum(0), QuadNum(0), QuadNum(0)}};
  QuadNum cursor(0);
  for (std::size_t i = 0; i < q.k(); ++i) {
    Box b{QuadNum(0), QuadNum(0), QuadNum(0), QuadNum(0)};
    for (const Vec2& p : corners(q, i)) b.add(p);
    const QuadNum shift = cursor - b.x0;
    l.offsets.push_back(shift);
    l.box.add({b.x0 + shift, b.y0});
    l.box.add({b.x1 + shift, b.y1});
    cursor = b.x1 + shift + gap;
  }
  return l;
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels, const RenderSpec& spec) {
  if (spec.scale.sign() <= 0) throw std::invalid_argument("scale must be positive");
  if (spec.panels_per_row == 0) throw std::invalid_argument("panels_per_row must be positive");
  const QuadNum s(spec.scale);
  const QuadNum gap(Rational(1, 2));
  const QuadNum margin(Rational(1, 2));
  const QuadNum caption_room(Rational(3, 4));

  std::vector<Layout> layouts;
  QuadNum cell_w(1), cell_h(1);
  for (const Panel& p : panels) {
    layouts.push_back(layout(p.q, gap));
    const Box& b = layouts.back().box;
    cell_w = qmax(cell_w, b.x1 - b.x0);
    cell_h = qmax(cell_h, b.y1 - b.y0);
  }
  cell_w += QuadNum(2) * margin;
  cell_h += QuadNum(2) * margin + caption_room;
  const std::size_t cols = std::max<std::size_t>(1, std::min(spec.panels_per_row, panels.size()));
  const std::size_t rows = std::max<std::size_t>(1, (panels.size() + cols - 1) / cols);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(s * cell_w * QuadNum(static_cast<long>(cols)))
     << "\" height=\"" << num(s * cell_h * QuadNum(static_cast<long>(rows))) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t n = 0; n < panels.size(); ++n) {
    const Panel& p = panels[n];
    const Layout& l = layouts[n];
    const QuadNum ox = cell_w * QuadNum(static_cast<long>(n % cols)) + margin - l.box.x0;
    // SVG y grows downwards; the panel top sits at the caption line.
    const QuadNum oy = cell_h * QuadNum(static_cast<long>(n / cols)) + caption_room + margin + l.box.y1;
    auto X = [&](const QuadNum& x) { return num(s * (ox + x)); };
    auto Y = [&](const QuadNum& y) { return num(s * (oy - y)); };

    os << "<g id=\"panel-" << n << "\">\n";
    os << "<text x=\"" << num(s * (cell_w * QuadNum(static_cast<long>(n % cols)) + margin)) << "\" y=\""
       << num(s * (cell_h * QuadNum(static_cast<long>(n / cols)) + caption_room / QuadNum(2) + margin / QuadNum(2)))
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << p.caption << "</text>\n";
    const farey::Direction& d = spec.direction_overlay ? *spec.direction_overlay : p.q.ref_dir();
    for (std::size_t i = 0; i < p.q.k(); ++i) {
      const QuadNum dx = l.offsets[i];
      const auto c = corners(p.q, i);
      os << "<polygon points=\"";
      for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << X(c[j].x + dx) << "," << Y(c[j].y);
      os << "\" fill=\"#dde6f0\" stroke=\"black\" stroke-width=\"1\"/>\n";
      os << "<line x1=\"" << X(c[1].x + dx) << "\" y1=\"" << Y(c[1].y) << "\" x2=\"" << X(c[3].x + dx) << "\" y2=\""
         << Y(c[3].y) << "\" stroke=\"#888\" stroke-dasharray=\"4,3\"/>\n";
      if (!d.is_horizontal()) {
        // The direction from the bottom vertex up to the top of the diagonal.
        const QuadNum t = c[2].y / d.vec().y;
        os << "<line x1=\"" << X(dx) << "\" y1=\"" << Y(QuadNum(0)) << "\" x2=\"" << X(t * d.vec().x + dx)
           << "\" y2=\"" << Y(t * d.vec().y) << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
      }
      if (spec.show_labels) {
        const Vec2 mid = QuadNum(Rational(1, 2)) * c[2];
        os << "<text x=\"" << X(mid.x + dx) << "\" y=\"" << Y(mid.y)
           << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << i + 1 << "</text>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Panel> panels_from_json(const json_io::json& doc) {
  std::vector<Panel> out;
  if (doc.contains("panels")) {
    for (const auto& p : doc.at("panels")) {
      out.push_back({p.value("caption", std::string()), json_io::quadrangulation_from_json(p.at("quadrangulation"))});
    }
    return out;
  }
  out.push_back({"", json_io::quadrangulation_from_json(doc)});
  return out;
}

}  // namespace octocf::render

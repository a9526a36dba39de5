#include "hyperlay/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "hyperlay/projection.hpp"

namespace hyperlay {

namespace {

constexpr double kCollinearArea = 1e-9;
constexpr double kMarginPx = 24.0;
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr const char* kDefaultNodeColor = "#3b5b92";

std::string num(double v) {
  if (v == 0.0) return "0";  // avoids "-0"
  return fmt::format("{:.12g}", v);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string cluster_color(int cluster) {
  const int k = static_cast<int>(std::size(kPalette));
  return kPalette[((cluster % k) + k) % k];
}

// Maps disk coordinates to canvas pixels (y axis pointing down).
struct Screen {
  double center;
  double radius;
  double x(double dx) const { return center + radius * dx; }
  double y(double dy) const { return center - radius * dy; }
};

// Path segment from the current point (`a`) to `b`.
std::string segment_to(const Screen& s, const PoincarePoint& a, const PoincarePoint& b, bool geodesic) {
  if (geodesic && !(a == b)) {
    const GeodesicArc arc = geodesic_arc(a, b);
    if (arc.kind == GeodesicArc::Kind::circular_arc) {
      const double ax = s.x(a.x()) - s.x(arc.center.x), ay = s.y(a.y()) - s.y(arc.center.y);
      const double bx = s.x(b.x()) - s.x(arc.center.x), by = s.y(b.y()) - s.y(arc.center.y);
      const int sweep = ax * by - ay * bx > 0.0 ? 1 : 0;
      const std::string r = num(arc.radius * s.radius);
      return fmt::format(" A {} {} 0 0 {} {} {}", r, r, sweep, num(s.x(b.x())), num(s.y(b.y())));
    }
  }
  return fmt::format(" L {} {}", num(s.x(b.x())), num(s.y(b.y())));
}

// Disk images of points of any geometry; `scale` maps Euclidean units.
std::vector<PoincarePoint> to_disk(const Coordinates& c, double clamp, double scale) {
  std::vector<PoincarePoint> out;
  std::visit(
      [&](const auto& pts) {
        using Point = typename std::decay_t<decltype(pts)>::value_type;
        out.reserve(pts.size());
        for (const auto& p : pts) {
          if constexpr (std::is_same_v<Point, LobachevskyPoint>) {
            out.push_back(to_display(p, clamp));
          } else if constexpr (std::is_same_v<Point, EuclideanPoint>) {
            out.push_back(clamp_disk(PoincarePoint(scale * p.x, scale * p.y), clamp));
          } else {
            const double rho = std::atan2(std::hypot(p.x(), p.y()), p.z());
            const double th = std::atan2(p.y(), p.x());
            const double r = std::min(rho / std::numbers::pi, clamp);
            out.push_back(PoincarePoint(r * std::cos(th), r * std::sin(th)));
          }
        }
      },
      c);
  return out;
}

double euclidean_scale(const Layout& l) {
  if (l.geometry() != Geometry::euclidean) return 1.0;
  double far = 0.0;
  for (const auto& p : l.points<EuclideanPoint>()) far = std::max(far, std::hypot(p.x, p.y));
  return far > 0.0 ? 0.9 / far : 1.0;
}

}  // namespace

void RenderStyle::validate() const {
  if (!(edge_opacity >= 0.0 && edge_opacity <= 1.0)) throw std::invalid_argument("edge opacity must lie in [0, 1]");
  if (!(label_base_px >= 0.0 && label_base_px <= 40.0)) throw std::invalid_argument("label size must lie in [0, 40]");
  if (!(zoom >= 0.5 && zoom <= 1.5)) throw std::invalid_argument("zoom must lie in [0.5, 1.5]");
  if (!(clamp > 0.0 && clamp < 1.0)) throw std::invalid_argument("clamp must lie in (0, 1)");
  if (disk_px <= 0) throw std::invalid_argument("disk size must be positive");
  if (!(node_px >= 0.0)) throw std::invalid_argument("node size must be nonnegative");
}

GeodesicArc geodesic_arc(const PoincarePoint& p, const PoincarePoint& q) {
  if (p == q) throw std::invalid_argument("geodesic_arc needs distinct points");
  GeodesicArc arc;
  arc.from = {p.x(), p.y()};
  arc.to = {q.x(), q.y()};
  const DiskComplex a = p.z(), b = q.z();
  // Twice the area of the triangle (0, p, q); zero when the geodesic is a diameter.
  const DiskReal det = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(det) / 2.0L < kCollinearArea) return arc;

  // Center c satisfies c.p = (1 + |p|^2) / 2 and c.q = (1 + |q|^2) / 2, which
  // puts both p and its inversion 1 / conj(p) on the circle.
  const DiskReal hp = (1.0L + std::norm(a)) / 2.0L;
  const DiskReal hq = (1.0L + std::norm(b)) / 2.0L;
  const DiskReal cx = (hp * b.imag() - hq * a.imag()) / det;
  const DiskReal cy = (a.real() * hq - b.real() * hp) / det;
  const DiskReal r = std::sqrt(cx * cx + cy * cy - 1.0L);

  arc.kind = GeodesicArc::Kind::circular_arc;
  arc.center = {static_cast<double>(cx), static_cast<double>(cy)};
  arc.radius = static_cast<double>(r);
  arc.start_angle = static_cast<double>(std::atan2(a.imag() - cy, a.real() - cx));
  arc.end_angle = static_cast<double>(std::atan2(b.imag() - cy, b.real() - cx));
  return arc;
}

double label_size(const RenderStyle& style, const PoincarePoint& z) {
  return style.label_base_px * static_cast<double>(1.0L - std::norm(z.z()));
}

std::vector<PoincarePoint> display_points(const Layout& l, double clamp) {
  return to_disk(l.coords, clamp, euclidean_scale(l));
}

std::string render_svg(const Layout& l, const Graph& g, const RenderStyle& style) {
  style.validate();
  if (l.size() != g.size()) throw std::invalid_argument("layout and graph sizes differ");
  const bool geodesic = l.geometry() == Geometry::hyperbolic;
  const double scale = euclidean_scale(l);
  const auto pts = to_disk(l.coords, style.clamp, scale);

  const double canvas = 2.0 * (style.disk_px + kMarginPx);
  const Screen s{canvas / 2.0, style.disk_px * style.zoom};

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", num(canvas));
  out += fmt::format("<circle class=\"disk\" cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"#fafafa\" stroke=\"#333333\" "
                     "stroke-width=\"1\"/>\n",
                     num(s.center), num(s.radius));

  if (!l.polygons.empty()) {
    out += "<g class=\"polygons\" fill-opacity=\"0.25\" stroke=\"none\">\n";
    for (const auto& poly : l.polygons) {
      const auto v = to_disk(poly.vertices, style.clamp, scale);
      if (v.size() < 3) continue;
      std::string d = fmt::format("M {} {}", num(s.x(v[0].x())), num(s.y(v[0].y())));
      for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        if (!(a == b)) d += segment_to(s, a, b, geodesic);
      }
      d += " Z";
      const std::string color = poly.color.empty() ? cluster_color(poly.cluster) : poly.color;
      out += fmt::format("<path data-cluster=\"{}\" fill=\"{}\" d=\"{}\"/>\n", poly.cluster, xml_escape(color), d);
    }
    out += "</g>\n";
  }

  out += fmt::format("<g class=\"edges\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" stroke-opacity=\"{}\">\n",
                     num(style.edge_opacity));
  for (const auto& e : g.edges()) {
    const auto& a = pts[e.u];
    const auto& b = pts[e.v];
    out += fmt::format("<path d=\"M {} {}{}\"/>\n", num(s.x(a.x())), num(s.y(a.y())), segment_to(s, a, b, geodesic));
  }
  out += "</g>\n";

  out += "<g class=\"nodes\" stroke=\"#ffffff\" stroke-width=\"0.5\">\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& node = g.nodes()[k];
    const double factor = static_cast<double>(1.0L - std::norm(pts[k].z()));
    const std::string color = node.cluster ? cluster_color(*node.cluster) : kDefaultNodeColor;
    out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", num(s.x(pts[k].x())),
                       num(s.y(pts[k].y())), num(style.node_px * style.zoom * factor), color);
  }
  out += "</g>\n";

  if (style.label_base_px > 0.0) {
    out += "<g class=\"labels\" font-family=\"Arial\" text-anchor=\"middle\" fill=\"#111111\">\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double size = label_size(style, pts[k]);
      const double factor = static_cast<double>(1.0L - std::norm(pts[k].z()));
      const double lift = style.node_px * style.zoom * factor + 0.25 * size;
      out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>\n", num(s.x(pts[k].x())),
                         num(s.y(pts[k].y()) - lift), num(size), xml_escape(g.nodes()[k].label));
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hyperlay

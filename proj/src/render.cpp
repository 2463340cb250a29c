#include "packinglab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "packinglab/error.hpp"

namespace packinglab {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Segment {
  double x0, y0, x1, y1;
};

// Clips the line {p : p.n = c} to the square [lo, hi]^2 (Liang-Barsky on a
// long parametrized segment).
std::optional<Segment> clip_line(double nx, double ny, double c, double xlo, double xhi,
                                 double ylo, double yhi) {
  const double px = nx * c, py = ny * c;
  const double dx = -ny, dy = nx;
  const double span = 4 * (std::fabs(xhi - xlo) + std::fabs(yhi - ylo) + std::fabs(c) + 1);
  double t0 = -span, t1 = span;
  auto clip = [&](double p, double q) {
    if (p == 0) return q >= 0;
    const double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      t0 = std::max(t0, r);
    } else {
      if (r < t0) return false;
      t1 = std::min(t1, r);
    }
    return true;
  };
  if (!clip(-dx, px - xlo) || !clip(dx, xhi - px) || !clip(-dy, py - ylo) ||
      !clip(dy, yhi - py) || t0 >= t1) {
    return std::nullopt;
  }
  return Segment{px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy};
}

}  // namespace

std::string render_svg(const Packing& p, const Viewport& vp, bool labels) {
  if (p.dim != 2) {
    throw Error(ErrorKind::UnsupportedDimension,
                "only planar packings can be rendered (dimension " + std::to_string(p.dim) + ")");
  }
  if (!(vp.half_width > 0) || vp.size_px <= 0) {
    throw Error(ErrorKind::InvalidInput, "viewport needs a positive width and size");
  }
  const double scale = vp.size_px / (2 * vp.half_width);
  const double xlo = vp.cx - vp.half_width, xhi = vp.cx + vp.half_width;
  const double ylo = vp.cy - vp.half_width, yhi = vp.cy + vp.half_width;
  auto px = [&](double x) { return (x - xlo) * scale; };
  auto py = [&](double y) { return (yhi - y) * scale; };

  const std::string size = std::to_string(vp.size_px);
  std::string shapes, text;
  for (const auto& s : p.spheres) {
    const auto& v = s.v;
    if (v.is_plane()) {
      const auto seg = clip_line(v[2].to_double(), v[3].to_double(), v.cobend().to_double() / 2,
                                 xlo, xhi, ylo, yhi);
      if (!seg) continue;
      shapes += "<line x1=\"" + fmt(px(seg->x0)) + "\" y1=\"" + fmt(py(seg->y0)) + "\" x2=\"" +
                fmt(px(seg->x1)) + "\" y2=\"" + fmt(py(seg->y1)) + "\"/>\n";
      continue;
    }
    const auto z = v.center();
    const double x = z[0].to_double(), y = z[1].to_double();
    const double r = std::fabs(v.radius().to_double());
    const double nearx = std::clamp(x, xlo, xhi), neary = std::clamp(y, ylo, yhi);
    if (std::hypot(x - nearx, y - neary) > r) continue;
    const double rpx = r * scale;
    if (rpx < vp.min_radius_px) continue;
    shapes += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"" + fmt(rpx) +
              "\"/>\n";
    if (labels) {
      const std::string label = v.bend().str();
      const double font = rpx / std::max<double>(1.5, 0.35 * label.size() + 0.8);
      const double ly = v.bend().sign() < 0 ? py(y) - 0.85 * rpx + font : py(y);
      text += "<text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(ly) + "\" font-size=\"" + fmt(font) +
              "\">" + label + "</text>\n";
    }
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<rect width=\"" + size + "\" height=\"" + size + "\" fill=\"white\"/>\n";
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n" + shapes + "</g>\n";
  if (labels) {
    out += "<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n" +
           text + "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace packinglab

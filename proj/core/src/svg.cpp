#include "johncut/svg.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "johncut/errors.h"

namespace johncut {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 0.02;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                          "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#86bcb6"};
constexpr int kPaletteSize = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));

struct Mapper {
  Vec2 lo;
  double scale = 1.0;

  explicit Mapper(const BBox& b) {
    lo = b.lo;
    const double w = b.hi.x - b.lo.x, h = b.hi.y - b.lo.y;
    const double span = std::max(std::max(w, h), 1e-12);
    scale = kCanvas * (1.0 - 2.0 * kMargin) / span;
    // Center the short axis.
    off.x = kCanvas * kMargin + 0.5 * (kCanvas * (1.0 - 2.0 * kMargin) - scale * w);
    off.y = kCanvas * kMargin + 0.5 * (kCanvas * (1.0 - 2.0 * kMargin) - scale * h);
  }
  Vec2 off{0.0, 0.0};
  double x(Vec2 p) const { return off.x + scale * (p.x - lo.x); }
  double y(Vec2 p) const { return kCanvas - (off.y + scale * (p.y - lo.y)); }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string path_of(const Polygon& P, const Mapper& m) {
  std::string d;
  for (int i = 0; i < P.size(); ++i) {
    d += (i == 0 ? "M" : "L");
    d += num(m.x(P.vertex(i))) + " " + num(m.y(P.vertex(i)));
  }
  d += "Z";
  return d;
}

}  // namespace

void write_partition_svg(const std::string& path, const Partition& part,
                         const SvgOverlay& overlay) {
  BBox box;
  if (part.input.size() > 0) box.expand(part.input.bbox());
  for (const Polygon& p : part.pieces) box.expand(p.bbox());
  for (const Polygon& p : part.exceptional) box.expand(p.bbox());
  if (box.lo.x > box.hi.x) box = BBox{{0.0, 0.0}, {1.0, 1.0}};
  const Mapper m(box);

  std::ofstream out(path);
  if (!out) throw Error(Err::BadInput, "cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

  for (std::size_t i = 0; i < part.pieces.size(); ++i)
    out << "<path d=\"" << path_of(part.pieces[i], m) << "\" fill=\""
        << kPalette[i % kPaletteSize]
        << "\" fill-opacity=\"0.8\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (const Polygon& p : part.exceptional)
    out << "<path d=\"" << path_of(p, m)
        << "\" fill=\"#bbbbbb\" fill-opacity=\"0.9\" stroke=\"#888888\" "
           "stroke-width=\"0.5\"/>\n";
  for (const Chord& c : part.cuts)
    out << "<line x1=\"" << num(m.x(c.v)) << "\" y1=\"" << num(m.y(c.v)) << "\" x2=\""
        << num(m.x(c.w)) << "\" y2=\"" << num(m.y(c.w))
        << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  for (const Segment& s : overlay.slits)
    out << "<line x1=\"" << num(m.x(s.a)) << "\" y1=\"" << num(m.y(s.a)) << "\" x2=\""
        << num(m.x(s.b)) << "\" y2=\"" << num(m.y(s.b))
        << "\" stroke=\"#2f2f2f\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
  for (const Disk& d : overlay.disks)
    out << "<circle cx=\"" << num(m.x(d.center)) << "\" cy=\"" << num(m.y(d.center))
        << "\" r=\"" << num(m.scale * d.radius)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  for (const auto& curve : overlay.curves) {
    if (curve.size() < 2) continue;
    out << "<polyline points=\"";
    for (const Vec2& p : curve) out << num(m.x(p)) << "," << num(m.y(p)) << " ";
    out << "\" fill=\"none\" stroke=\"#6a0dad\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace johncut

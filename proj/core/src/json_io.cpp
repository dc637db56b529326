#include "johncut/json_io.h"

#include <fstream>

#include "johncut/errors.h"

namespace johncut {

namespace {

ordered_json points_json(const std::vector<Vec2>& pts) {
  ordered_json a = ordered_json::array();
  for (const Vec2& p : pts) a.push_back({p.x, p.y});
  return a;
}

std::vector<Vec2> points_from(const ordered_json& j) {
  if (!j.is_array()) throw Error(Err::BadInput, "expected an array of points");
  std::vector<Vec2> pts;
  pts.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw Error(Err::BadInput, "point must be a [x, y] pair");
    pts.push_back({e[0].get<double>(), e[1].get<double>()});
  }
  return pts;
}

}  // namespace

ordered_json to_json(const Polygon& P) {
  ordered_json j;
  j["vertices"] = points_json(P.verts());
  return j;
}

ordered_json to_json(const DomainInput& d) {
  ordered_json j;
  j["outer"] = points_json(d.outer);
  ordered_json holes = ordered_json::array();
  for (const auto& h : d.holes) holes.push_back(points_json(h));
  j["holes"] = holes;
  j["spacing"] = d.spacing;
  return j;
}

ordered_json to_json(const Chord& c) {
  return ordered_json{{"v", {c.v.x, c.v.y}}, {"w", {c.w.x, c.w.y}}, {"length", c.length()}};
}

ordered_json to_json(const Partition& part) {
  ordered_json j;
  j["pieces"] = ordered_json::array();
  for (const Polygon& p : part.pieces) j["pieces"].push_back(to_json(p));
  j["exceptional"] = ordered_json::array();
  for (const Polygon& p : part.exceptional) j["exceptional"].push_back(to_json(p));
  j["cuts"] = ordered_json::array();
  for (const Chord& c : part.cuts) j["cuts"].push_back(to_json(c));
  j["pieces_boundary_sum"] = part.pieces_boundary_sum();
  j["exceptional_boundary_sum"] = part.exceptional_boundary_sum();
  j["cut_length_sum"] = part.cut_length_sum();
  return j;
}

ordered_json to_json(const SemiconvexCert& c) {
  ordered_json j;
  j["vartheta"] = c.vartheta;
  j["pass"] = c.pass;
  if (c.counterexample) {
    j["counterexample"] = to_json(*c.counterexample);
    j["counterexample_min_diameter"] = c.counterexample_min_diameter;
  }
  j["candidates_examined"] = c.candidates_examined;
  return j;
}

ordered_json to_json(const RotundCert& c) {
  ordered_json j;
  j["omega"] = c.omega;
  j["pass"] = c.pass;
  j["disk_center"] = {c.disk.center.x, c.disk.center.y};
  j["disk_radius"] = c.disk.radius;
  j["intrinsic_diameter"] = c.d;
  return j;
}

ordered_json to_json(const JohnCert& c, bool include_curves) {
  ordered_json j;
  j["rho"] = c.rho;
  j["pass"] = c.pass;
  j["center"] = {c.center.x, c.center.y};
  j["worst_margin"] = c.worst_margin;
  j["samples"] = static_cast<int>(c.samples.size());
  int failed = 0;
  for (const JohnSample& s : c.samples)
    if (!s.pass) ++failed;
  j["failed_samples"] = failed;
  if (include_curves) {
    ordered_json arr = ordered_json::array();
    for (const JohnSample& s : c.samples) {
      ordered_json e;
      e["x"] = {s.x.x, s.x.y};
      e["pass"] = s.pass;
      e["worst_margin"] = s.worst_margin;
      e["curve"] = points_json(s.curve);
      arr.push_back(e);
    }
    j["sample_curves"] = arr;
  }
  return j;
}

ordered_json to_json(const PipelineResult& r) {
  ordered_json j;
  j["partition"] = to_json(r.partition);
  j["vartheta_used"] = r.vartheta_used;
  j["omega_min"] = r.omega_min;
  j["part_seg_ok"] = r.part_seg_ok;
  j["semiconvex_certs"] = ordered_json::array();
  for (const auto& c : r.semiconvex_certs) j["semiconvex_certs"].push_back(to_json(c));
  j["rotund_certs"] = ordered_json::array();
  for (const auto& c : r.rotund_certs) j["rotund_certs"].push_back(to_json(c));
  return j;
}

ordered_json to_json(const DomainDecomposition& r) {
  ordered_json j;
  j["partition"] = to_json(r.partition);
  j["rho"] = r.rho;
  j["boundary_total"] = r.boundary_total;
  j["pieces_total"] = r.pieces_total;
  j["ledger_ok"] = r.ledger_ok;
  j["all_certified"] = r.all_certified;
  j["slits"] = ordered_json::array();
  for (const Segment& s : r.slits)
    j["slits"].push_back({{"a", {s.a.x, s.a.y}}, {"b", {s.b.x, s.b.y}}});
  j["john_certs"] = ordered_json::array();
  for (const auto& c : r.john_certs) j["john_certs"].push_back(to_json(c));
  return j;
}

Polygon polygon_from_json(const ordered_json& j) {
  if (!j.contains("vertices")) throw Error(Err::BadInput, "polygon JSON needs \"vertices\"");
  return Polygon::validate(points_from(j["vertices"]));
}

DomainInput domain_from_json(const ordered_json& j) {
  if (!j.contains("outer")) throw Error(Err::BadInput, "domain JSON needs \"outer\"");
  DomainInput d;
  d.outer = points_from(j["outer"]);
  if (j.contains("holes"))
    for (const auto& h : j["holes"]) d.holes.push_back(points_from(h));
  if (j.contains("spacing")) d.spacing = j["spacing"].get<double>();
  return d;
}

bool looks_like_domain(const ordered_json& j) { return j.is_object() && j.contains("outer"); }

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::BadInput, "cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Err::BadInput, std::string("JSON parse error: ") + e.what());
  }
  return j;
}

void write_json(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Err::BadInput, "cannot write " + path);
  out << dump_json(j);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace johncut

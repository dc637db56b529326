#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "johncut/fixtures.h"
#include "johncut/john.h"
#include "johncut/json_io.h"
#include "johncut/rotund.h"
#include "johncut/semiconvex.h"
#include "johncut/smooth.h"
#include "johncut/svg.h"

namespace {

using namespace johncut;

struct Options {
  std::string input, out, svg, kind, check;
  double theta = 0.25, eta = 0.05, epsilon = 0.01;
  double rho = 0.1, vartheta = 0.1, omega = 0.1;
  double rho_override = 0.0;  // 0 = estimate a common level
  int samples = 200;
  unsigned seed = 42;
  bool stress = false;
  int generation = 2, teeth = 3, turns = 4;
  double gap = 0.1, radius = 1.0;
  int domain_samples = 512;
};

JohnConfig john_config(const Options& o) {
  JohnConfig cfg;
  cfg.n_points = o.samples;
  cfg.carrot_samples = std::max(10 * o.samples, 500);
  cfg.seed = o.seed;
  cfg.stress = o.stress ? 4 : 1;
  return cfg;
}

void maybe_write(const Options& o, const ordered_json& report) {
  if (!o.out.empty()) write_json(o.out, report);
}

// A witness curve in the largest piece, for the SVG overlay.
SvgOverlay partition_overlay(const Partition& part) {
  SvgOverlay ov;
  const Polygon* big = nullptr;
  for (const Polygon& p : part.pieces)
    if (!big || p.area() > big->area()) big = &p;
  if (!big) return ov;
  for (const Polygon& p : part.pieces) ov.disks.push_back(inscribed_disk(p));
  try {
    const Disk d = inscribed_disk(*big);
    Vec2 x = big->vertex(0) + 0.02 * (d.center - big->vertex(0));
    if (!big->strictly_contains(x)) x = big->interior_point();
    const JohnCurve curve = build_john_curve(*big, 0.3, 0.3, x, d.center);
    ov.curves.push_back(curve.polyline());
  } catch (const Error&) {
    // Overlay is cosmetic; skip the curve when construction declines.
  }
  return ov;
}

int run_generate(const Options& o) {
  FixtureSpec spec;
  spec.kind = o.kind;
  spec.generation = o.generation;
  spec.teeth = o.teeth;
  spec.gap = o.gap;
  spec.turns = o.turns;
  spec.seed = o.seed;
  const Polygon P = make_fixture(spec);
  const ordered_json j = to_json(P);
  if (o.out.empty())
    std::cout << dump_json(j);
  else
    write_json(o.out, j);
  return 0;
}

int run_generate_domain(const Options& o) {
  DomainInput d;
  if (o.kind == "circle")
    d = circle_input(o.radius, o.domain_samples);
  else if (o.kind == "rounded-square")
    d = rounded_square_input(0.05, std::max(o.domain_samples, 1600));
  else if (o.kind == "ellipse")
    d = ellipse_input(2.0 * o.radius, 0.5 * o.radius, o.domain_samples);
  else if (o.kind == "annulus")
    d = annulus_input();
  else
    throw Error(Err::UnknownKind, "unknown domain kind: " + o.kind);
  const ordered_json j = to_json(d);
  if (o.out.empty())
    std::cout << dump_json(j);
  else
    write_json(o.out, j);
  return 0;
}

int run_decompose(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ordered_json in = load_json(o.input);
  ordered_json report;
  report["config"] = ordered_json{{"theta", o.theta},   {"eta", o.eta},
                                  {"epsilon", o.epsilon}, {"samples", o.samples},
                                  {"seed", o.seed},     {"stress", o.stress}};
  bool ok = false;
  if (looks_like_domain(in)) {
    const DomainInput d = domain_from_json(in);
    DomainPipelineConfig cfg;
    cfg.john = john_config(o);
    cfg.rho = o.rho_override;
    const DomainDecomposition r = decompose_domain(d, o.theta, o.epsilon, cfg);
    report["domain"] = to_json(r);
    ok = r.ledger_ok && r.all_certified;
    if (!o.svg.empty()) {
      SvgOverlay ov = partition_overlay(r.partition);
      ov.slits = r.slits;
      write_partition_svg(o.svg, r.partition, ov);
    }
    std::cout << "pieces " << r.partition.pieces.size() << "  rho " << r.rho << "  ledger "
              << (r.ledger_ok ? "pass" : "fail") << "  certified "
              << (r.all_certified ? "pass" : "fail") << "\n";
  } else {
    const Polygon P = polygon_from_json(in);
    const PipelineResult r = decompose_polygon(P, o.theta, o.eta, o.epsilon);
    const LedgerResult led = ledger_check(r.partition, o.theta);
    const bool identity = ledger_identity_check(r.partition);
    report["pipeline"] = to_json(r);
    report["ledger"] = ordered_json{{"ok", led.ok}, {"slack", led.slack}, {"identity", identity}};
    ok = led.ok && identity && r.part_seg_ok;
    if (!o.svg.empty()) write_partition_svg(o.svg, r.partition, partition_overlay(r.partition));
    std::cout << "pieces " << r.partition.pieces.size() << "  exceptional "
              << r.partition.exceptional.size() << "  ledger " << (led.ok ? "pass" : "fail")
              << "\n";
  }
  maybe_write(o, report);
  const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  std::cerr << "elapsed " << dt.count() << " s\n";
  return ok ? 0 : 1;
}

int run_certify(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const ordered_json in = load_json(o.input);
  const Polygon P = polygon_from_json(in);
  ordered_json report;
  bool pass = false;
  if (o.check == "semiconvex") {
    const SemiconvexCert c = certify_semiconvex(P, o.vartheta);
    report["semiconvex"] = to_json(c);
    pass = c.pass;
  } else if (o.check == "rotund") {
    const RotundCert c = certify_rotund(P, o.omega);
    report["rotund"] = to_json(c);
    pass = c.pass;
  } else if (o.check == "john") {
    const JohnCert c = certify_john(P, o.rho, john_config(o));
    report["john"] = to_json(c);
    pass = c.pass;
  } else {
    throw Error(Err::BadInput, "check must be semiconvex, rotund or john");
  }
  maybe_write(o, report);
  std::cout << o.check << " " << (pass ? "pass" : "fail") << "\n";
  const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  std::cerr << "elapsed " << dt.count() << " s\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposes simply connected planar domains into uniformly John pieces "
               "and certifies semiconvexity, rotundness and carrot conditions."};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("generate", "Write a fixture polygon as JSON");
  gen->add_option("kind", o.kind,
                  "koch-variant | comb | notched-rect | spiral | l-shape | random-convex | blob")
      ->required();
  gen->add_option("--gen", o.generation, "koch-variant generation");
  gen->add_option("--teeth", o.teeth, "comb tooth count");
  gen->add_option("--gap", o.gap, "notched-rect gap");
  gen->add_option("--turns", o.turns, "spiral turn count");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output path (stdout when absent)");

  CLI::App* gend = app.add_subcommand("generate-domain", "Write a sampled smooth domain as JSON");
  gend->add_option("kind", o.kind, "circle | rounded-square | ellipse | annulus")->required();
  gend->add_option("--radius", o.radius, "scale factor");
  gend->add_option("--samples", o.domain_samples, "boundary sample count");
  gend->add_option("--out", o.out, "output path (stdout when absent)");

  CLI::App* dec = app.add_subcommand("decompose", "Run the full decomposition pipeline");
  dec->add_option("--input", o.input, "polygon or domain JSON")->required();
  dec->add_option("--theta", o.theta, "boundary-growth budget in (0,1]");
  dec->add_option("--eta", o.eta, "cigar opening");
  dec->add_option("--epsilon", o.epsilon, "exceptional boundary budget (relative)");
  dec->add_option("--rho", o.rho_override, "certification level override for domains");
  dec->add_option("--samples", o.samples, "certification sample count");
  dec->add_option("--seed", o.seed, "random seed");
  dec->add_flag("--stress", o.stress, "quadruple sampling densities");
  dec->add_option("--out", o.out, "report path");
  dec->add_option("--svg", o.svg, "rendering path");

  CLI::App* cert = app.add_subcommand("certify", "Run a single certification");
  cert->add_option("--input", o.input, "polygon JSON")->required();
  cert->add_option("--check", o.check, "semiconvex | rotund | john")->required();
  cert->add_option("--vartheta", o.vartheta, "semiconvexity level");
  cert->add_option("--omega", o.omega, "rotundness level");
  cert->add_option("--rho", o.rho, "carrot level");
  cert->add_option("--samples", o.samples, "sample count");
  cert->add_option("--seed", o.seed, "random seed");
  cert->add_flag("--stress", o.stress, "quadruple sampling densities");
  cert->add_option("--out", o.out, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_generate(o);
    if (gend->parsed()) return run_generate_domain(o);
    if (dec->parsed()) return run_decompose(o);
    if (cert->parsed()) return run_certify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

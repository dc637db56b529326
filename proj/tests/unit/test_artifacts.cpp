#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "johncut/errors.h"
#include "johncut/fixtures.h"
#include "johncut/json_io.h"
#include "johncut/rotund.h"
#include "johncut/smooth.h"
#include "johncut/svg.h"
#include "support.h"

using namespace johncut;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_SUITE("artifacts") {

TEST_CASE("koch family perimeters follow the closed form") {
  CHECK(koch_perimeter(0) == doctest::Approx(3.0));
  CHECK(koch_perimeter(1) == doctest::Approx(4.0));
  const double mult = 2.0 / 3.0 + 1.0 / (3.0 * std::cos(std::numbers::pi / 6.0));
  CHECK(koch_perimeter(2) / koch_perimeter(1) == doctest::Approx(mult).epsilon(1e-9));
  for (int i = 0; i <= 4; ++i)
    CHECK(koch_variant(i).boundary_length() == doctest::Approx(koch_perimeter(i)).epsilon(1e-9));
  CHECK(koch_perimeter(8) < 6.0);
}

TEST_CASE("generator shapes have the advertised structure") {
  Polygon c = comb(5);
  CHECK(c.size() == 20);
  CHECK(int(c.concave_indices().size()) == 8);

  Polygon s = spiral(4);
  for (int k = 0; k < s.size(); ++k) {
    const double a = s.interior_angle(k);
    const bool right = std::abs(a - std::numbers::pi / 2) < 1e-9 ||
                       std::abs(a - 3 * std::numbers::pi / 2) < 1e-9;
    CHECK(right);
  }

  Polygon b1 = blob(42);
  Polygon b2 = blob(42);
  CHECK(b1.size() == 24);
  CHECK(rings_cyclically_equal(b1.verts(), b2.verts(), 0.0));
  CHECK_FALSE(rings_cyclically_equal(b1.verts(), blob(43).verts(), 1e-12));

  CHECK(random_convex(7).is_convex());

  Polygon n = notched_rect(0.1);
  const std::vector<Vec2> expect{{0, 0},    {10, 0},   {10, 1}, {5.05, 1},
                                 {5, 0.1},  {4.95, 1}, {0, 1}};
  CHECK(rings_cyclically_equal(n.verts(), expect, 1e-12));

  FixtureSpec bad;
  bad.kind = "dodecahedron";
  CHECK_THROWS_AS(make_fixture(bad), Error);
}

TEST_CASE("json round trips preserve geometry") {
  Polygon P = blob(9);
  const ordered_json jp = to_json(P);
  Polygon P2 = polygon_from_json(jp);
  CHECK(rings_cyclically_equal(P.verts(), P2.verts(), 0.0));
  CHECK_FALSE(looks_like_domain(jp));

  const DomainInput d = annulus_input();
  const ordered_json jd = to_json(d);
  CHECK(looks_like_domain(jd));
  const DomainInput d2 = domain_from_json(jd);
  CHECK(d2.holes.size() == d.holes.size());
  CHECK(d2.boundary_length() == doctest::Approx(d.boundary_length()));
  CHECK(d2.spacing == doctest::Approx(d.spacing));
}

TEST_CASE("malformed json reports a load error") {
  const auto path = std::filesystem::temp_directory_path() / "johncut_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    load_json(path.string());
    FAIL("expected BadInput");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadInput);
    CHECK(std::string(e.what()).find("JSON parse error") != std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST_CASE("pipeline reports are deterministic") {
  const PipelineResult r1 = decompose_polygon(l_shape_poly(), 0.25);
  const PipelineResult r2 = decompose_polygon(l_shape_poly(), 0.25);
  CHECK(dump_json(to_json(r1)) == dump_json(to_json(r2)));
}

TEST_CASE("svg rendering emits one path per piece") {
  const PipelineResult r = decompose_polygon(notched_rect(0.1), 0.5);
  const auto path = std::filesystem::temp_directory_path() / "johncut_test.svg";
  write_partition_svg(path.string(), r.partition);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string svg = ss.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<path") >=
        int(r.partition.pieces.size() + r.partition.cuts.size()));
  std::filesystem::remove(path);
}

}

#include "doctest.h"

#include "foxnorm/report.hpp"
#include "support.hpp"

using namespace foxnorm;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("polytope JSON round trip") {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 100; ++i) {
    const int rank = i % 3 == 0 ? 1 : 2;
    MarkedPolytope p = support::random_polytope(rng, rank, 1 + rng() % 6, 4);
    p = translate(p, QPoint::halves(static_cast<std::int64_t>(rng() % 3), rank == 2 ? 1 : 0));
    const Json j = to_json(p);
    CHECK(polytope_from_json(j) == p);
    CHECK(polytope_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("report JSON is canonical") {
  NormReport report = compute_marked_polytope(Presentation::from_text(support::kDunfield));
  report.query(Covector::of(1, 0));
  report.query(Covector::of(1, 1));
  const std::string text = to_json(report).dump();
  CHECK(Json::parse(text).dump() == text);
  const Json j = Json::parse(text);
  CHECK(j["provenance"] == "both-agree");
  CHECK(j["queries"][0]["norm"] == Json::array({2, 1}));
  CHECK(j["queries"][1]["fibered"]["verdict"] == "not-fibered");
  CHECK(j["polytope"]["marked"] == Json::array({1, 3}));
}

TEST_CASE("rank-one report names the conversion") {
  const NormReport report = compute_marked_polytope(Presentation::from_text("xyxy^-1x^-1y^-1"));
  const Json j = to_json(report);
  CHECK(j["betti"] == 1);
  CHECK(j["conversion"]["simple_relator"] == "xy^-1xyx^-2y");
  CHECK(j["provenance"] == "fox");
}

TEST_CASE("presentation file") {
  const PresentationFile f = presentation_file_from_json(
      Json::parse(R"({"relator": "xyXY", "labels": {"x": "a"}, "boundary_components": 1})"));
  CHECK(f.relator == "xyXY");
  CHECK(f.labels.at("x") == "a");
  CHECK(f.boundary_components == 1);
  CHECK_FALSE(presentation_file_from_json(Json::parse(R"({"relator": "x"})")).boundary_components);
}

TEST_CASE("SVG drawing") {
  const MarkedPolytope m = compute_marked_polytope(Presentation::from_text(support::kDunfield)).polytope;
  const std::string svg = render_svg(m);
  CHECK(svg.find("viewBox=\"-1 -3 4 5\"") != std::string::npos);
  CHECK(count(svg, "<circle") == 4);
  CHECK(count(svg, "fill=\"#000000\"") == 2);
  CHECK(count(svg, "<polygon") == 1);
}

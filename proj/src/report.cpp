#include "foxnorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "foxnorm/error.hpp"

namespace foxnorm {

Json to_json(const Rational& r) { return Json::array({r.numerator(), r.denominator()}); }

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::EmptyInput, "rational must be [num, den]");
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

Json to_json(const QPoint& p, int rank) {
  if (rank == 1) return to_json(p.coord(0));
  return Json::array({to_json(p.coord(0)), to_json(p.coord(1))});
}

Json to_json(const Covector& phi) {
  Json out = Json::array();
  for (int i = 0; i < phi.rank; ++i) out.push_back(to_json(phi.c[static_cast<std::size_t>(i)]));
  return out;
}

Json to_json(const MarkedPolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(to_json(v, p.rank()));
  Json marked = Json::array();
  for (auto i : p.marked_indices()) marked.push_back(i);
  return {{"rank", p.rank()}, {"vertices", vertices}, {"marked", marked}};
}

MarkedPolytope polytope_from_json(const Json& j) {
  const int rank = j.at("rank").get<int>();
  std::vector<QPoint> vertices;
  auto doubled = [](const Json& c) {
    const Rational r = rational_from_json(c) * 2;
    if (r.denominator() != 1) throw Error(ErrorKind::NotHalfIntegral, "coordinate outside (1/2)Z");
    return r.numerator();
  };
  for (const auto& v : j.at("vertices")) {
    if (rank == 1) {
      vertices.push_back(QPoint::halves(doubled(v)));
    } else {
      vertices.push_back(QPoint::halves(doubled(v.at(0)), doubled(v.at(1))));
    }
  }
  std::vector<bool> marked(vertices.size(), false);
  for (const auto& i : j.at("marked")) marked.at(i.get<std::size_t>()) = true;
  return MarkedPolytope(rank, std::move(vertices), std::move(marked));
}

namespace {

Json conversion_json(const SimpleConversion& c) {
  Json moves = Json::array();
  for (const auto& m : c.trace) moves.push_back(m.to_string());
  return {{"simple_relator", c.presentation.relator().to_string()}, {"trace", moves}};
}

Json verdict_json(const FiberedVerdict& v, int rank) {
  Json out = {{"verdict", to_string(v.kind)}};
  out["vertex"] = v.vertex ? to_json(*v.vertex, rank) : Json(nullptr);
  return out;
}

}  // namespace

Json to_json(const NormReport& report) {
  Json queries = Json::array();
  for (const auto& q : report.queries) {
    queries.push_back({{"phi", to_json(q.phi)},
                       {"norm", to_json(q.norm)},
                       {"fibered", verdict_json(q.fibered, report.betti)}});
  }
  Json out = {{"relator", report.presentation.relator().to_string()},
              {"betti", report.betti},
              {"provenance", to_string(report.provenance)},
              {"polytope", to_json(report.polytope)},
              {"queries", queries}};
  out["conversion"] = report.conversion ? conversion_json(*report.conversion) : Json(nullptr);
  return out;
}

Json to_json(const UnitBall& ball, int rank) {
  if (!ball.ball) {
    return {{"kind", "whole-space"}, {"point_marked", ball.point_marked}, {"vertices", Json::array()},
            {"faces", Json::array()}};
  }
  const DualBall& b = *ball.ball;
  Json vertices = Json::array();
  for (const auto& v : b.vertices) {
    if (rank == 1) {
      vertices.push_back(to_json(v[0]));
    } else {
      vertices.push_back(Json::array({to_json(v[0]), to_json(v[1])}));
    }
  }
  Json faces = Json::array();
  for (const auto& f : b.faces) {
    faces.push_back({{"normal", to_json(f.normal, rank)}, {"paired", to_json(f.paired, rank)}, {"fibered", f.marked}});
  }
  return {{"kind", b.kind == DualBall::Kind::Strip ? "strip" : "bounded"}, {"vertices", vertices}, {"faces", faces}};
}

Json to_json(const Certificate& cert) {
  Json rewrites = Json::array();
  for (const auto& rw : cert.rewrites) {
    rewrites.push_back({{"side", rw.side == Rewrite::Side::P ? "p" : "q"},
                        {"term", rw.term.to_string()},
                        {"position", rw.position},
                        {"removed", rw.removed.to_string()},
                        {"inserted", rw.inserted.to_string()}});
  }
  return {{"left", cert.left.to_string()}, {"right", cert.right.to_string()}, {"rewrites", rewrites}};
}

Json to_json(const SymmetryReport& report) {
  auto pairing_json = [](const OppositePairing& pairing) {
    Json out = Json::array();
    for (const auto& pr : pairing.pairs) {
      out.push_back({{"v", to_json(pr.v, 2)},
                     {"w", to_json(pr.w, 2)},
                     {"witness", to_json(pr.witness)},
                     {"v_unique", pr.v_unique},
                     {"w_unique", pr.w_unique}});
    }
    return out;
  };
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry = {{"reading", to_string(c.reading)},
                  {"v", to_json(c.v, 2)},
                  {"w", to_json(c.w, 2)},
                  {"sign_tried", c.sign},
                  {"verdict", to_string(c.outcome)},
                  {"lhs", c.lhs.to_string()},
                  {"rhs", c.rhs.to_string()},
                  {"truncated", c.truncated}};
    entry["certificate"] = c.certificate ? to_json(*c.certificate) : Json(nullptr);
    checks.push_back(std::move(entry));
  }
  Json out = {{"relator", report.presentation.relator().to_string()},
              {"depth", report.options.depth},
              {"opposite", "normal cone of v meets the negated normal cone of w in an open set"},
              {"pairings",
               {{"cross", pairing_json(report.pairings.cross)}, {"within_r_x", pairing_json(report.pairings.within_rx)}}},
              {"checks", checks}};
  out["boundary_components"] =
      report.options.boundary_components ? Json(*report.options.boundary_components) : Json(nullptr);
  return out;
}

PresentationFile presentation_file_from_json(const Json& j) {
  PresentationFile f;
  f.relator = j.at("relator").get<std::string>();
  if (j.contains("labels")) {
    for (const auto& [k, v] : j.at("labels").items()) f.labels[k] = v.get<std::string>();
  }
  if (j.contains("boundary_components") && !j.at("boundary_components").is_null()) {
    f.boundary_components = j.at("boundary_components").get<int>();
  }
  return f;
}

std::string render_svg(const MarkedPolytope& p) {
  auto x_of = [](const QPoint& q) { return static_cast<double>(q.twice[0]) / 2.0; };
  auto y_of = [](const QPoint& q) { return -static_cast<double>(q.twice[1]) / 2.0; };  // SVG y grows downward
  double xmin = x_of(p.vertex(0));
  double xmax = xmin;
  double ymin = y_of(p.vertex(0));
  double ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, x_of(v));
    xmax = std::max(xmax, x_of(v));
    ymin = std::min(ymin, y_of(v));
    ymax = std::max(ymax, y_of(v));
  }
  xmin -= 1;
  ymin -= 1;
  xmax += 1;
  ymax += 1;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin << ' ' << ymin << ' ' << (xmax - xmin) << ' '
     << (ymax - ymin) << "\">\n";
  os << "  <g stroke=\"#cccccc\" stroke-width=\"0.02\">\n";
  for (double gx = std::ceil(xmin); gx <= xmax; gx += 1) {
    os << "    <line x1=\"" << gx << "\" y1=\"" << ymin << "\" x2=\"" << gx << "\" y2=\"" << ymax << "\"/>\n";
  }
  for (double gy = std::ceil(ymin); gy <= ymax; gy += 1) {
    os << "    <line x1=\"" << xmin << "\" y1=\"" << gy << "\" x2=\"" << xmax << "\" y2=\"" << gy << "\"/>\n";
  }
  os << "  </g>\n";
  if (p.size() >= 2) {
    os << "  <polygon fill=\"#dde8f5\" stroke=\"#1f4e8c\" stroke-width=\"0.04\" points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
      os << (i ? " " : "") << x_of(p.vertex(i)) << ',' << y_of(p.vertex(i));
    }
    os << "\"/>\n";
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  <circle cx=\"" << x_of(p.vertex(i)) << "\" cy=\"" << y_of(p.vertex(i)) << "\" r=\"0.12\" ";
    if (p.is_marked(i)) {
      os << "fill=\"#000000\"/>\n";
    } else {
      os << "fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"0.04\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace foxnorm

#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "foxnorm/norm.hpp"
#include "foxnorm/polytope.hpp"
#include "foxnorm/symmetry.hpp"

namespace foxnorm {

using Json = nlohmann::json;

/// Exact rationals travel as [numerator, denominator].
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QPoint& p, int rank);
Json to_json(const Covector& phi);

/// {"rank": 1|2, "vertices": [...], "marked": [indices]}.
Json to_json(const MarkedPolytope& p);
/// Inverse of to_json; vertices must already be in canonical order.
MarkedPolytope polytope_from_json(const Json& j);

Json to_json(const NormReport& report);
Json to_json(const UnitBall& ball, int rank);
Json to_json(const Certificate& cert);
Json to_json(const SymmetryReport& report);

/// Relator plus optional metadata, as stored in a presentation file.
struct PresentationFile {
  std::string relator;
  std::map<std::string, std::string> labels;
  std::optional<int> boundary_components;
};

PresentationFile presentation_file_from_json(const Json& j);

/// Marked polytope over a unit lattice grid: marked vertices filled, others
/// stroked. The view box is the bounding box plus one unit on every side.
std::string render_svg(const MarkedPolytope& p);

}  // namespace foxnorm

// Command-line front end: marked polytopes, Thurston norms, fibered classes,
// unit balls and the opposite-vertex symmetry check for <x, y | r>.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "foxnorm/error.hpp"
#include "foxnorm/norm.hpp"
#include "foxnorm/report.hpp"
#include "foxnorm/symmetry.hpp"

namespace {

using namespace foxnorm;

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct Input {
  std::string relator;
  std::string file;
  std::optional<int> boundary_components;

  void attach(CLI::App* app) {
    app->add_option("relator", relator, "relator over x, y, X, Y with optional ^n exponents");
    app->add_option("--file", file, "JSON presentation file {relator, labels?, boundary_components?}");
  }

  Presentation load() {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error(ErrorKind::EmptyInput, "cannot open " + file);
      const PresentationFile pf = presentation_file_from_json(Json::parse(in));
      relator = pf.relator;
      if (pf.boundary_components) boundary_components = pf.boundary_components;
    }
    if (relator.empty()) throw Error(ErrorKind::EmptyInput, "no relator given");
    return Presentation::from_text(relator);
  }
};

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    const auto n = std::stoll(s.substr(0, slash));
    const auto d = std::stoll(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::MalformedExponent, "not a rational number: " + s);
  }
}

/// "a,b" or "a" with integer or p/q entries.
Covector parse_phi(const std::string& text) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  Covector phi;
  if (parts.size() == 1) {
    phi.rank = 1;
    phi.c = {parts[0], Rational(0)};
  } else if (parts.size() == 2) {
    phi.rank = 2;
    phi.c = {parts[0], parts[1]};
  } else {
    throw Error(ErrorKind::RankMismatch, "covector needs one or two entries: " + text);
  }
  return phi;
}

void check_arity(const NormReport& report, const Covector& phi) {
  if (phi.rank != report.betti) {
    throw Error(ErrorKind::RankMismatch, "covector has " + std::to_string(phi.rank) + " entries but b1 = " +
                                             std::to_string(report.betti));
  }
}

Method parse_method(const std::string& m) {
  if (m == "walk") return Method::Walk;
  if (m == "fox") return Method::Fox;
  return Method::Both;
}

std::string format_rational(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Word random_zero_sum_relator(std::mt19937_64& rng, std::size_t half) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> pick(0, 3);
  for (std::size_t i = 0; i < half; ++i) {
    const Letter l{pick(rng) < 2 ? Generator::x : Generator::y, 1};
    letters.push_back(l);
    letters.push_back(l.inverse());
  }
  std::shuffle(letters.begin(), letters.end(), rng);
  return cyclic_reduce(free_reduce(Word(letters))).core;
}

int selftest(std::size_t count) {
  std::uint64_t seed = 20240611;
  if (const char* env = std::getenv("THURSTON_FOX_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::mt19937_64 rng(seed);
  std::size_t checked = 0;
  std::size_t failures = 0;
  while (checked < count) {
    const Word r = random_zero_sum_relator(rng, 4 + rng() % 16);
    if (r.empty()) continue;
    ++checked;
    const Presentation p(r);
    try {
      const MarkedPolytope walk = polytope_via_walk(p);
      const MarkedPolytope fox = polytope_via_fox(p);
      if (!translation_equiv(walk, fox)) {
        ++failures;
        std::cout << "MISMATCH " << r.to_string() << "\n";
      }
    } catch (const Error& e) {
      ++failures;
      std::cout << "ERROR " << r.to_string() << ": " << e.what() << "\n";
    }
  }
  std::cout << "seed " << seed << ": " << checked - failures << "/" << checked << " relators agree\n";
  return failures == 0 ? 0 : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marked polytopes and Thurston norms of two-generator one-relator presentations"};
  app.require_subcommand(1);

  Input input;
  std::string method = "both";
  bool as_json = false;
  std::string svg_path;
  std::vector<std::string> phis;
  int depth = 2;
  std::optional<int> boundary;
  std::size_t selftest_count = 100;

  auto* polytope_cmd = app.add_subcommand("polytope", "compute the marked polytope");
  input.attach(polytope_cmd);
  polytope_cmd->add_option("--method", method, "walk, fox or both")
      ->check(CLI::IsMember({"walk", "fox", "both"}));
  polytope_cmd->add_flag("--json", as_json, "print JSON");
  polytope_cmd->add_option("--svg", svg_path, "write an SVG drawing to this path");

  auto* norm_cmd = app.add_subcommand("norm", "evaluate the Thurston norm");
  input.attach(norm_cmd);
  norm_cmd->add_option("--phi", phis, "covector a,b (or a when b1 = 1); repeatable")
      ->required()
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  norm_cmd->add_flag("--json", as_json, "print JSON");

  auto* fibered_cmd = app.add_subcommand("fibered", "decide whether a class is fibered");
  input.attach(fibered_cmd);
  fibered_cmd->add_option("--phi", phis, "covector a,b (or a when b1 = 1); repeatable")
      ->required()
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  fibered_cmd->add_flag("--json", as_json, "print JSON");

  auto* ball_cmd = app.add_subcommand("ball", "unit ball of the norm with fibered faces");
  input.attach(ball_cmd);

  auto* symmetry_cmd = app.add_subcommand("symmetry", "check opposite-vertex symmetry of Fox components");
  input.attach(symmetry_cmd);
  symmetry_cmd->add_option("--boundary", boundary, "number of boundary tori")->check(CLI::Range(1, 2));
  symmetry_cmd->add_option("--depth", depth, "maximal number of relator rewrites")->check(CLI::Range(0, 6));

  auto* selftest_cmd = app.add_subcommand("selftest", "walk/fox agreement on random relators");
  selftest_cmd->add_option("--count", selftest_count, "number of relators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*selftest_cmd) return selftest(selftest_count);

    const Presentation p = input.load();

    if (*polytope_cmd) {
      const NormReport report = compute_marked_polytope(p, parse_method(method));
      if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        out << render_svg(report.polytope);
      }
      if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
      } else {
        std::cout << "b1 " << report.betti << "\n";
        std::cout << "provenance " << to_string(report.provenance) << "\n";
        if (report.conversion) std::cout << "simple relator " << report.conversion->presentation.relator().to_string() << "\n";
        std::cout << "M " << report.polytope.to_string() << "\n";
      }
      return 0;
    }

    if (*norm_cmd || *fibered_cmd) {
      NormReport report = compute_marked_polytope(p);
      for (const auto& text : phis) {
        const Covector phi = parse_phi(text);
        check_arity(report, phi);
        report.query(phi);
      }
      if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
        return 0;
      }
      for (const auto& q : report.queries) {
        std::cout << "phi (" << format_rational(q.phi.c[0]);
        if (q.phi.rank == 2) std::cout << "," << format_rational(q.phi.c[1]);
        std::cout << "): ";
        if (*norm_cmd) {
          std::cout << "norm " << format_rational(q.norm) << "\n";
        } else {
          std::cout << to_string(q.fibered.kind) << "\n";
        }
      }
      return 0;
    }

    if (*ball_cmd) {
      const NormReport report = compute_marked_polytope(p);
      std::cout << to_json(unit_ball(report), report.betti).dump(2) << "\n";
      return 0;
    }

    if (*symmetry_cmd) {
      SymmetryOptions options;
      options.boundary_components = boundary ? boundary : input.boundary_components;
      options.depth = depth;
      std::cout << to_json(check_conjecture(p, options)).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_mathematical() ? kExitMath : kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error (json): " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycenter/center.hpp"
#include "polycenter/central_line.hpp"
#include "polycenter/corpus.hpp"
#include "polycenter/dsl.hpp"
#include "polycenter/io.hpp"
#include "polycenter/svg.hpp"
#include "polycenter/symmetry.hpp"
#include "polycenter/tangential.hpp"

using namespace polycenter;
using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain error whose JSON body carries more than kind and message.
struct DetailedError {
  Json body;
};

struct Options {
  std::string in;
  std::string g1, g2;
  std::string expr, expr_file;
  std::string svg_path;
  std::string line_file;
  std::string weights;
  std::vector<std::string> center_names;
  std::string n_range;
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  bool all = false;
};

struct NRange {
  std::size_t lo, hi;
  std::size_t at(std::size_t i) const { return lo + i % (hi - lo + 1); }
};

NRange parse_n_range(const std::string& text, NRange fallback) {
  if (text.empty()) return fallback;
  const auto parse_one = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 3) throw UsageError("--n expects N or LO..HI with values >= 3");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_one(text);
    return {n, n};
  }
  const NRange r{parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
  if (r.lo > r.hi) throw UsageError("--n range is empty");
  return r;
}

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw UsageError("--weights expects comma-separated numbers");
    w.push_back(v);
  }
  return w;
}

std::string expression_source(const Options& o) {
  if (!o.expr.empty()) return o.expr;
  std::ifstream f(o.expr_file);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + o.expr_file);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Polygon input_polygon(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  return io::read_polygon_file(o.in);
}

void maybe_svg(const Options& o, svg::Scene scene) {
  if (o.svg_path.empty()) return;
  scene.diagonal_midpoints = scene.polygon.size() > 3;
  svg::write(o.svg_path, scene);
}

std::vector<CenterEvaluation> accepting_builtins(const Polygon& p) {
  std::vector<CenterEvaluation> out;
  for (const std::string& name : builtin_names()) {
    const CenterFunction g = builtin(name);
    if (!g.accepts(p)) continue;
    try {
      out.push_back(coordinate_map(g, p));
    } catch (const Error&) {
    }
  }
  return out;
}

Json run_centers(const Options& o) {
  const Polygon p = input_polygon(o);
  std::vector<std::string> names = o.center_names;
  const bool everything = o.all || (names.empty() && o.expr.empty() && o.expr_file.empty());
  if (everything) names = builtin_names();

  Json centers = Json::array();
  Json skipped = Json::array();
  svg::Scene scene{p, {}, {}, false};
  const auto evaluate = [&](const CenterFunction& g) {
    try {
      const CenterEvaluation e = coordinate_map(g, p);
      centers.push_back(io::to_json(e));
      scene.centers.push_back({e.source_name, e.point});
    } catch (const Error& err) {
      // Explicitly requested centers must succeed; --all just reports.
      if (!everything) throw;
      skipped.push_back(Json{{"name", g.name}, {"error", std::string(to_string(err.kind()))}});
    }
  };
  for (const std::string& name : names) evaluate(builtin(name));
  if (!o.expr.empty() || !o.expr_file.empty()) {
    const auto e = dsl::parse(expression_source(o), p.size());
    evaluate(dsl::compile(e, p.size(), {}, "expr").function);
  }
  maybe_svg(o, scene);
  Json out{{"centers", centers}};
  if (!skipped.empty()) out["skipped"] = skipped;
  return out;
}

Json run_line(const Options& o) {
  if (o.g1.empty() || o.g2.empty()) throw UsageError("line needs --g1 and --g2");
  const Polygon p = input_polygon(o);
  const CenterFunction g1 = builtin(o.g1);
  const CenterFunction g2 = builtin(o.g2);
  const LineSystem system = kimberling_line(g1, g2, p);
  const RealizedLine line = realize(system, p);
  svg::Scene scene{p, {}, {line}, false};
  for (const CenterFunction* g : {&g1, &g2}) {
    const CenterEvaluation e = coordinate_map(*g, p);
    scene.centers.push_back({e.source_name, e.point});
  }
  maybe_svg(o, scene);
  Json out = io::to_json(line);
  out["system"] = io::to_json(system);
  return out;
}

Json run_membership(const Options& o) {
  if (o.line_file.empty()) throw UsageError("membership needs --line");
  const Polygon p = input_polygon(o);
  const LineSystem line = io::read_line_system_file(o.line_file);
  std::optional<CoefficientVector> lambda;
  if (!o.weights.empty()) {
    lambda.emplace(parse_weights(o.weights));
  } else if (!o.g1.empty()) {
    lambda.emplace(coordinate_map(builtin(o.g1), p).coefficients);
  } else {
    throw UsageError("membership needs --weights or --g1");
  }
  const bool member = contains(line, p, *lambda);
  return Json{{"member", member}, {"weights", io::to_json(*lambda)}};
}

Json run_symmetry(const Options& o) {
  const Polygon p = input_polygon(o);
  const SymmetryGroup group = symmetry_group(p);
  Json elements = Json::array();
  for (const SymmetryElement& e : group.elements) {
    elements.push_back(Json{{"rotation", e.relabelling.rotation}, {"reflected", e.relabelling.reflected}});
  }
  const std::vector<CenterEvaluation> centers = accepting_builtins(p);
  const ContainmentReport containment = verify_fixed_set_containment(p, centers);

  Json coincide = Json::array();
  for (const CenterEvaluation& a : centers) {
    Json row = Json::array();
    for (const CenterEvaluation& b : centers) row.push_back(distance(a.point, b.point) <= p.tau());
    coincide.push_back(row);
  }
  Json names = Json::array();
  for (const CenterEvaluation& e : centers) names.push_back(e.source_name);

  Json out{{"group_order", group.order()},
           {"elements", elements},
           {"fixed_set", io::to_json(fixed_set(group))},
           {"central_vectors", io::to_json(central_vectors(p))},
           {"containment", io::to_json(containment)},
           {"center_names", names},
           {"coincident", coincide}};
  if (centers.size() >= 3) {
    out["all_collinear"] = centers_collinear(centers, kTrigonAreaTolerance * p.diameter() * p.diameter());
  }
  svg::Scene scene{p, {}, {}, false};
  for (const CenterEvaluation& e : centers) scene.centers.push_back({e.source_name, e.point});
  const FixedSet f = containment.fixed;
  if (f.kind == FixedSet::Kind::Line) scene.lines.push_back(f.line);
  if (f.kind == FixedSet::Kind::Point) scene.lines.push_back(RealizedLine::single_point(f.point));
  maybe_svg(o, scene);
  return out;
}

Json run_tangential(const Options& o) {
  std::optional<Polygon> generated;
  if (o.in.empty()) {
    corpus::Rng rng(o.seed);
    generated = corpus::random_tangential(rng, parse_n_range(o.n_range, {4, 4}).lo);
  }
  const Polygon p = generated ? *generated : input_polygon(o);
  const Incircle inc = incircle(p);
  const TangentLengths t = tangent_lengths(p, inc);
  const CenterEvaluation center = incenter(p);
  const AmCollinearityReport am = verify_AM_collinearity(p);
  Json out;
  if (generated) out["polygon"] = io::to_json(p);
  Json xs = Json::array();
  for (double x : t.x) xs.push_back(io::round12(x));
  out["incircle"] = io::to_json(inc);
  out["tangent_lengths"] = xs;
  out["incenter"] = io::to_json(center);
  out["am_collinearity"] = io::to_json(am);
  maybe_svg(o, svg::Scene{p,
                          {{"incenter", am.incenter},
                           {"boundary_centroid", am.boundary_centroid},
                           {"lamina_centroid", am.lamina_centroid}},
                          {line_through(am.incenter, am.lamina_centroid, p.tau())},
                          false});
  return out;
}

// One check of a verification suite: a report plus its verdict.
struct Check {
  bool pass;
  Json report;
};

Check run_suite_on(const std::string& suite, const Polygon& p) {
  if (suite == "fixed-set-containment") {
    const ContainmentReport r = verify_fixed_set_containment(p, accepting_builtins(p));
    return {r.pass(), io::to_json(r)};
  }
  if (suite == "trigon-classification") {
    const TrigonClassification t = classify_trigon(p);
    return {t.agree(), io::to_json(t)};
  }
  if (suite == "parallelogram") {
    const ParallelogramReport r = verify_parallelogram_theorem(p);
    return {r.pass(), io::to_json(r)};
  }
  if (suite == "am-collinearity") {
    const AmCollinearityReport r = verify_AM_collinearity(p);
    return {r.pass(), io::to_json(r)};
  }
  const RectangleCounterexampleReport r = is_central_line_counterexample_rectangle(p);
  return {r.pass(), io::to_json(r)};
}

Polygon generate_for_suite(const std::string& suite, corpus::Rng& rng, std::size_t i, NRange ns) {
  if (suite == "fixed-set-containment") {
    switch (i % 7) {
      case 0: return corpus::square(rng);
      case 1: return corpus::non_square_rectangle(rng);
      case 2: return corpus::isosceles_triangle(rng);
      case 3: return corpus::kite(rng);
      case 4: return corpus::regular_polygon(rng, ns.at(i));
      case 5: return corpus::random_convex(rng, ns.at(i));
      default: return corpus::random_polygon(rng, ns.at(i));
    }
  }
  if (suite == "trigon-classification") {
    switch (i % 4) {
      case 0: return corpus::equilateral_triangle(rng);
      case 1: return corpus::isosceles_triangle(rng);
      default: return corpus::random_triangle(rng);
    }
  }
  if (suite == "parallelogram") return corpus::parallelogram(rng);
  if (suite == "am-collinearity") return corpus::random_tangential(rng, ns.at(i));
  return corpus::non_square_rectangle(rng);
}

Json run_verify(const Options& o) {
  static const std::vector<std::string> suites = {"fixed-set-containment", "trigon-classification",
                                                  "parallelogram", "am-collinearity",
                                                  "rectangle-counterexample"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  std::vector<Polygon> polygons;
  if (!o.in.empty()) {
    polygons.push_back(io::read_polygon_file(o.in));
  } else {
    const NRange ns = parse_n_range(o.n_range, {3, 8});
    corpus::Rng rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) polygons.push_back(generate_for_suite(o.suite, rng, i, ns));
  }

  std::size_t pass = 0;
  Json failures = Json::array();
  Json reports = Json::array();
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    Check c{false, {}};
    try {
      c = run_suite_on(o.suite, polygons[i]);
    } catch (const Error& e) {
      c.report = io::error_json(e);
    }
    if (c.pass) {
      ++pass;
    } else {
      failures.push_back(Json{{"index", i}, {"polygon", io::to_json(polygons[i])}, {"report", c.report}});
    }
    if (!o.in.empty()) reports.push_back(c.report);
  }
  Json out{{"pass", pass}, {"fail", polygons.size() - pass}};
  if (!o.in.empty()) {
    out["report"] = reports[0];
  } else if (!failures.empty()) {
    out["failures"] = failures;
  }
  return out;
}

Json run_dsl(const Options& o) {
  std::size_t n = 0;
  std::optional<Polygon> p;
  if (!o.in.empty()) {
    p = io::read_polygon_file(o.in);
    n = p->size();
  } else {
    n = parse_n_range(o.n_range, {0, 0}).lo;
    if (n == 0) throw UsageError("dsl needs --n or --in");
  }
  const dsl::ExprPtr e = dsl::parse(expression_source(o), n);
  Json out{{"expr", dsl::print(*e)}, {"n", n}};
  try {
    const dsl::DslCenterFunction f = dsl::compile(e, n, {}, "expr");
    out["symmetric"] = f.verified_symmetry;
    out["degree"] = *f.estimated_degree;
    if (p) out["center"] = io::to_json(coordinate_map(f.function, *p));
  } catch (const dsl::SymmetryViolation& v) {
    Json err = io::error_json(v);
    err["witness"] = io::to_json(v.witness());
    err["value"] = io::round12(v.value());
    err["sigma_value"] = io::round12(v.sigma_value());
    throw DetailedError{err};
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygon centers, central lines and their theorems"};
  app.require_subcommand(1);
  Options o;

  const auto add_in = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Polygon JSON file"); };
  const auto add_svg = [&](CLI::App* sub) { sub->add_option("--svg", o.svg_path, "Write an SVG drawing"); };
  const auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "Center function expression");
    sub->add_option("--expr-file", o.expr_file, "File holding the expression");
  };

  CLI::App* centers = app.add_subcommand("centers", "Evaluate centers of a polygon");
  add_in(centers);
  add_svg(centers);
  add_expr(centers);
  centers->add_flag("--all", o.all, "All built-in centers");
  centers->add_option("--center", o.center_names, "Built-in center name (repeatable)");

  CLI::App* line = app.add_subcommand("line", "Kimberling line through two centers");
  add_in(line);
  add_svg(line);
  line->add_option("--g1", o.g1, "First center")->required();
  line->add_option("--g2", o.g2, "Second center")->required();

  CLI::App* membership = app.add_subcommand("membership", "Coefficient-level line membership");
  add_in(membership);
  membership->add_option("--line", o.line_file, "Line system JSON {\"n\",\"A\"}")->required();
  membership->add_option("--weights", o.weights, "Comma-separated coefficient vector");
  membership->add_option("--g1", o.g1, "Take the coefficients of this built-in center");

  CLI::App* symmetry = app.add_subcommand("symmetry", "Symmetry group, fixed set and central vectors");
  add_in(symmetry);
  add_svg(symmetry);

  CLI::App* tangential = app.add_subcommand("tangential", "Incircle, tangent lengths and incenter");
  add_in(tangential);
  add_svg(tangential);
  tangential->add_option("--seed", o.seed, "Generate a tangential polygon with this seed");
  tangential->add_option("--n", o.n_range, "Vertex count of the generated polygon");

  CLI::App* verify = app.add_subcommand("verify", "Run a theorem suite");
  verify->add_option("suite", o.suite,
                     "fixed-set-containment | trigon-classification | parallelogram | "
                     "am-collinearity | rectangle-counterexample")
      ->required();
  add_in(verify);
  verify->add_option("--seed", o.seed, "Corpus seed");
  verify->add_option("--count", o.count, "Corpus size");
  verify->add_option("--n", o.n_range, "Vertex counts, N or LO..HI");

  CLI::App* dsl_cmd = app.add_subcommand("dsl", "Parse and compile a center function expression");
  add_in(dsl_cmd);
  add_expr(dsl_cmd);
  dsl_cmd->add_option("--n", o.n_range, "Vertex count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* tol = std::getenv("POLYCENTER_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(tol, &end);
      if (*tol == '\0' || *end != '\0') throw UsageError("POLYCENTER_TOL must be a number");
      try {
        set_tolerance_factor(v);
      } catch (const Error& e) {
        throw UsageError(std::string("POLYCENTER_TOL: ") + e.what());
      }
    }
    if ((app.got_subcommand(centers) || app.got_subcommand(dsl_cmd)) && !o.expr.empty() &&
        !o.expr_file.empty()) {
      throw UsageError("give either --expr or --expr-file");
    }
    if (app.got_subcommand(dsl_cmd) && o.expr.empty() && o.expr_file.empty()) {
      throw UsageError("dsl needs --expr or --expr-file");
    }

    Json out;
    if (app.got_subcommand(centers)) out = run_centers(o);
    else if (app.got_subcommand(line)) out = run_line(o);
    else if (app.got_subcommand(membership)) out = run_membership(o);
    else if (app.got_subcommand(symmetry)) out = run_symmetry(o);
    else if (app.got_subcommand(tangential)) out = run_tangential(o);
    else if (app.got_subcommand(verify)) out = run_verify(o);
    else out = run_dsl(o);
    std::cout << io::dump(out) << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DetailedError& e) {
    std::cout << io::dump(e.body) << "\n";
    return 1;
  } catch (const Error& e) {
    std::cout << io::dump(io::error_json(e)) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << io::dump(Json{{"error", "Internal"}, {"message", e.what()}}) << "\n";
    return 1;
  }
}

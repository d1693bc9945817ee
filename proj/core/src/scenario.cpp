#include "gcalc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gcalc/mv_format.hpp"
#include "registry_detail.hpp"

namespace gcalc {
namespace {

using detail::ojson;

struct CheckName {
  CheckKind kind;
  const char* name;
};
constexpr CheckName kCheckNames[] = {
    {CheckKind::ftc, "ftc"},
    {CheckKind::content, "content"},
    {CheckKind::green, "green"},
    {CheckKind::stokes, "stokes"},
    {CheckKind::gauss, "gauss"},
    {CheckKind::path, "path"},
    {CheckKind::identities, "identities"},
    {CheckKind::monogenic, "monogenic"},
    {CheckKind::cauchy, "cauchy"},
    {CheckKind::cauchy_full, "cauchy_full"},
};

CheckKind kind_from_name(const std::string& s) {
  for (const CheckName& c : kCheckNames)
    if (s == c.name) return c.kind;
  throw UnknownKey("check '" + s + "'");
}

DerivMode mode_from_json(const ojson& doc, DerivMode fallback) {
  if (!doc.contains("mode")) return fallback;
  std::string m = detail::str(doc.at("mode"), "scenario.mode");
  if (m == "auto") return DerivMode::automatic;
  if (m == "fd") return DerivMode::force_fd;
  throw UnknownKey("mode '" + m + "'");
}

QuadratureSpec quad_from_json(const ojson& doc) {
  QuadratureSpec q;
  if (!doc.contains("quadrature")) return q;
  const ojson& obj = doc.at("quadrature");
  detail::check_keys(obj, {"rule", "q", "m"}, "quadrature");
  if (obj.contains("rule")) {
    std::string r = detail::str(obj.at("rule"), "quadrature.rule");
    if (r == "gauss")
      q.rule = QuadRule::gauss_legendre;
    else if (r == "midpoint")
      q.rule = QuadRule::midpoint;
    else
      throw UnknownKey("quadrature rule '" + r + "'");
  }
  if (obj.contains("q"))
    q.points = detail::integer(obj.at("q"), "quadrature.q");
  if (obj.contains("m"))
    q.subdivisions = detail::integer(obj.at("m"), "quadrature.m");
  q.validate();
  return q;
}

PatchComplex region_from_json(const ojson& doc) {
  const bool single = doc.contains("patch");
  const bool multi = doc.contains("patches");
  if (single == multi)
    throw ParseError("exactly one of 'patch' or 'patches' is required", 0, 0);
  if (single)
    return PatchComplex{
        {OrientedPatch{detail::patch_from_json(doc.at("patch"), 0), +1}}};
  const ojson& arr = doc.at("patches");
  if (!arr.is_array() || arr.empty())
    throw ParseError("patches: expected a nonempty array", 0, 0);
  std::vector<OrientedPatch> parts;
  for (const ojson& e : arr) {
    if (!e.is_object())
      throw ParseError("patches: entries must be objects", 0, 0);
    ojson copy = e;
    int ori = +1;
    if (copy.contains("orientation")) {
      ori = detail::integer(copy.at("orientation"), "patch.orientation");
      if (ori != 1 && ori != -1)
        throw ParseError("patch.orientation must be 1 or -1", 0, 0);
      copy.erase("orientation");
    }
    parts.push_back(OrientedPatch{detail::patch_from_json(copy, 0), ori});
  }
  return glue_patches(std::move(parts));
}

std::vector<Eigen::VectorXd> points_from_json(const ojson& doc, int dim) {
  std::vector<Eigen::VectorXd> pts;
  if (doc.contains("points")) {
    const ojson& arr = doc.at("points");
    if (!arr.is_array() || arr.empty())
      throw ParseError("points: expected a nonempty array", 0, 0);
    for (const ojson& p : arr) pts.push_back(detail::vec(p, "points", dim));
  }
  if (doc.contains("point"))
    pts.push_back(detail::vec(doc.at("point"), "point", dim));
  if (pts.empty())
    throw ParseError("this check needs 'points' or 'point'", 0, 0);
  return pts;
}

void bind_dim(Scenario& sc, int found, const std::string& what) {
  if (found < 1 || found > kMaxDim)
    throw DimensionMismatch(what + ": dimension out of range");
  if (sc.dim == 0)
    sc.dim = found;
  else if (sc.dim != found)
    throw DimensionMismatch(what + " lives in dimension " +
                            std::to_string(found) + ", document says " +
                            std::to_string(sc.dim));
}

std::vector<Interval> intervals_from_json(const ojson& v,
                                          const std::string& where) {
  if (!v.is_array() || v.empty())
    throw ParseError(where + ": expected an array of [lo, hi] pairs", 0, 0);
  std::vector<Interval> bounds;
  for (const ojson& b : v) {
    Eigen::VectorXd iv = detail::vec(b, where, 2);
    bounds.push_back(Interval{iv[0], iv[1]});
  }
  return bounds;
}

/// "type" first, the remaining keys alphabetical.
ojson canonical_object(const ojson& obj) {
  ojson out = ojson::object();
  if (obj.contains("type")) out["type"] = obj.at("type");
  std::vector<std::string> keys;
  for (const auto& item : obj.items())
    if (item.key() != "type") keys.push_back(item.key());
  std::sort(keys.begin(), keys.end());
  for (const std::string& k : keys) out[k] = obj.at(k);
  return out;
}

ojson canonical_value(const ojson& v) {
  if (v.is_object()) return canonical_object(v);
  if (v.is_array()) {
    ojson arr = ojson::array();
    for (const ojson& e : v) arr.push_back(canonical_value(e));
    return arr;
  }
  return v;
}

const char* rule_name(QuadRule r) {
  return r == QuadRule::gauss_legendre ? "gauss" : "midpoint";
}

/// Canonical re-emission: fixed key order, defaults made explicit.
std::string build_canonical(const Scenario& sc, const ojson& src) {
  ojson out = ojson::object();
  out["name"] = sc.name;
  out["check"] = check_kind_name(sc.check);
  out["dim"] = sc.dim;

  for (const char* key : {"patch", "patches", "curves", "boundary", "volume",
                          "box"})
    if (src.contains(key)) out[key] = canonical_value(src.at(key));

  const CheckKind c = sc.check;
  if (c == CheckKind::cauchy || c == CheckKind::cauchy_full) {
    ojson pts = ojson::array();
    for (const Eigen::VectorXd& p : sc.points) {
      ojson row = ojson::array();
      for (int i = 0; i < p.size(); ++i) row.push_back(p[i]);
      pts.push_back(row);
    }
    out["points"] = pts;
  }

  if (src.contains("f")) out["f"] = canonical_value(src.at("f"));
  if (c == CheckKind::ftc)
    out["g"] = src.contains("g")
                   ? canonical_value(src.at("g"))
                   : ojson{{"type", "constant"}, {"value", "1"}};
  if (sc.expect) out["expect"] = format_multivector(*sc.expect);

  const bool uses_quadrature =
      c == CheckKind::ftc || c == CheckKind::content || c == CheckKind::green ||
      c == CheckKind::stokes || c == CheckKind::gauss || c == CheckKind::path ||
      c == CheckKind::cauchy || c == CheckKind::cauchy_full;
  if (uses_quadrature) {
    ojson q = ojson::object();
    q["rule"] = rule_name(sc.quad.rule);
    q["q"] = sc.quad.points;
    q["m"] = sc.quad.subdivisions;
    out["quadrature"] = q;
  }

  if (sc.tolerance) out["tolerance"] = *sc.tolerance;

  const bool uses_mode = c != CheckKind::content && c != CheckKind::cauchy;
  if (uses_mode)
    out["mode"] = sc.mode == DerivMode::force_fd ? "fd" : "auto";

  if (c == CheckKind::ftc) out["refinements"] = sc.refinements;
  if (c == CheckKind::identities) {
    out["trials"] = sc.trials;
    out["seed"] = sc.seed;
  }
  if (c == CheckKind::monogenic) {
    out["samples"] = sc.samples;
    out["exclusion_radius"] = sc.exclusion_radius;
    out["seed"] = sc.seed;
  }
  return out.dump(2) + "\n";
}

Scenario build_scenario(const ojson& doc) {
  Scenario sc;
  sc.name =
      detail::str(detail::require(doc, "name", "scenario"), "scenario.name");
  sc.check = kind_from_name(
      detail::str(detail::require(doc, "check", "scenario"), "scenario.check"));
  if (doc.contains("dim")) {
    int d = detail::integer(doc.at("dim"), "scenario.dim");
    if (d < 1 || d > kMaxDim)
      throw DimensionMismatch("scenario.dim out of range");
    sc.dim = d;
  }
  sc.quad = quad_from_json(doc);
  if (doc.contains("tolerance"))
    sc.tolerance = detail::num(doc.at("tolerance"), "scenario.tolerance");
  if (doc.contains("seed"))
    sc.seed = doc.at("seed").is_number_unsigned()
                  ? doc.at("seed").get<std::uint64_t>()
                  : static_cast<std::uint64_t>(
                        detail::integer(doc.at("seed"), "scenario.seed"));

  auto field_arg = [&](const char* key) {
    return detail::field_from_json(detail::require(doc, key, "scenario"),
                                   sc.dim);
  };

  switch (sc.check) {
    case CheckKind::ftc: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "patch", "patches", "f", "g",
                          "quadrature", "tolerance", "mode", "refinements"},
                         "scenario");
      sc.region = region_from_json(doc);
      bind_dim(sc, sc.region.ambient_dim(), "patch");
      sc.f = field_arg("f");
      sc.g = doc.contains("g") ? detail::field_from_json(doc.at("g"), sc.dim)
                               : one_field(sc.dim);
      sc.mode = mode_from_json(doc, DerivMode::automatic);
      if (doc.contains("refinements")) {
        sc.refinements =
            detail::integer(doc.at("refinements"), "scenario.refinements");
        if (sc.refinements < 1)
          throw ParseError("refinements must be at least 1", 0, 0);
      }
      if (!sc.tolerance) sc.tolerance = 1e-5;
      break;
    }
    case CheckKind::content: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "patch", "patches", "expect",
                          "quadrature", "tolerance"},
                         "scenario");
      sc.region = region_from_json(doc);
      bind_dim(sc, sc.region.ambient_dim(), "patch");
      sc.expect = parse_multivector(
          detail::str(detail::require(doc, "expect", "scenario"),
                      "scenario.expect"),
          sc.dim);
      if (!sc.tolerance) sc.tolerance = 1e-5;
      break;
    }
    case CheckKind::green:
    case CheckKind::stokes:
    case CheckKind::gauss: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "patch", "f", "quadrature",
                          "tolerance", "mode"},
                         "scenario");
      sc.region = PatchComplex{{OrientedPatch{
          detail::patch_from_json(detail::require(doc, "patch", "scenario"), 0),
          +1}}};
      bind_dim(sc, sc.region.ambient_dim(), "patch");
      sc.f = field_arg("f");
      sc.mode = mode_from_json(doc, DerivMode::automatic);
      if (!sc.tolerance) sc.tolerance = 1e-5;
      break;
    }
    case CheckKind::path: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "curves", "f", "quadrature",
                          "tolerance", "mode"},
                         "scenario");
      const ojson& arr = detail::require(doc, "curves", "scenario");
      if (!arr.is_array() || arr.size() != 2)
        throw ParseError("curves: expected exactly two curve patches", 0, 0);
      for (const ojson& e : arr) {
        PatchMap c = detail::patch_from_json(e, 0);
        if (c.k() != 1)
          throw DimensionMismatch("curves must be 1-patches");
        bind_dim(sc, c.ambient_dim, "curve");
        sc.curves.push_back(std::move(c));
      }
      sc.f = field_arg("f");
      sc.mode = mode_from_json(doc, DerivMode::automatic);
      if (!sc.tolerance) sc.tolerance = 1e-5;
      break;
    }
    case CheckKind::identities: {
      detail::check_keys(
          doc, {"name", "check", "dim", "trials", "seed", "mode", "tolerance"},
          "scenario");
      if (sc.dim == 0)
        throw ParseError("identities: 'dim' is required", 0, 0);
      if (doc.contains("trials")) {
        sc.trials = detail::integer(doc.at("trials"), "scenario.trials");
        if (sc.trials < 1) throw ParseError("trials must be positive", 0, 0);
      }
      sc.mode = mode_from_json(doc, DerivMode::force_fd);
      if (!sc.tolerance)
        sc.tolerance = sc.mode == DerivMode::force_fd ? 1e-6 : 1e-12;
      break;
    }
    case CheckKind::monogenic: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "f", "box", "samples", "seed",
                          "mode", "tolerance", "exclusion_radius"},
                         "scenario");
      if (sc.dim == 0)
        throw ParseError("monogenic: 'dim' is required", 0, 0);
      sc.f = field_arg("f");
      std::vector<Interval> bounds = intervals_from_json(
          detail::require(doc, "box", "scenario"), "scenario.box");
      if (static_cast<int>(bounds.size()) != sc.dim)
        throw DimensionMismatch("box must carry one interval per dimension");
      sc.box = KRectangle(std::move(bounds));
      if (doc.contains("samples")) {
        sc.samples = detail::integer(doc.at("samples"), "scenario.samples");
        if (sc.samples < 1) throw ParseError("samples must be positive", 0, 0);
      }
      if (doc.contains("exclusion_radius"))
        sc.exclusion_radius =
            detail::num(doc.at("exclusion_radius"), "scenario.exclusion_radius");
      sc.mode = mode_from_json(doc, DerivMode::automatic);
      break;
    }
    case CheckKind::cauchy: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "f", "boundary", "point",
                          "points", "quadrature", "tolerance"},
                         "scenario");
      sc.boundary = detail::boundary_from_json(
          detail::require(doc, "boundary", "scenario"));
      bind_dim(sc, sc.boundary.ambient_dim(), "boundary");
      sc.f = field_arg("f");
      sc.points = points_from_json(doc, sc.dim);
      if (!sc.tolerance) sc.tolerance = 1e-6;
      break;
    }
    case CheckKind::cauchy_full: {
      detail::check_keys(doc,
                         {"name", "check", "dim", "f", "volume", "point",
                          "points", "quadrature", "tolerance", "mode"},
                         "scenario");
      sc.volume = detail::patch_from_json(
          detail::require(doc, "volume", "scenario"), 0);
      bind_dim(sc, sc.volume->ambient_dim, "volume");
      sc.f = field_arg("f");
      sc.points = points_from_json(doc, sc.dim);
      sc.mode = mode_from_json(doc, DerivMode::automatic);
      if (!sc.tolerance) sc.tolerance = 1e-3;
      break;
    }
  }

  sc.canonical = build_canonical(sc, doc);
  return sc;
}

std::string fmt(double v) { return format_double(v); }

std::string fmt_point(const Eigen::VectorXd& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ";";
    s += format_double(p[i]);
  }
  return s;
}

void add_row(std::string& csv, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) csv += ',';
    csv += c;
    first = false;
  }
  csv += '\n';
}

void add_line(std::string& s, const std::string& line) {
  s += line;
  s += '\n';
}

std::string verdict(bool ok) { return ok ? "[PASS]" : "[FAIL]"; }

constexpr char kConvergenceHeader[] =
    "scenario,k,n,q,m,lhs_norm,rhs_norm,abs_residual,rel_residual,nodes,"
    "wall_ms\n";
constexpr char kClassicalHeader[] = "theorem,scenario,lhs,rhs,residual,nodes\n";
constexpr char kReconstructionHeader[] =
    "n,scenario,xprime,direct_value,reconstructed_value,abs_err,nodes,"
    "excluded_radius\n";

RunResult run_ftc(const Scenario& sc, const QuadratureSpec& quad,
                  bool timing) {
  const double tol = sc.tolerance.value_or(1e-5);
  FtcReport rep =
      ftc_check(sc.g, sc.f, sc.region, quad, sc.refinements, sc.mode);

  RunResult out;
  out.csv = kConvergenceHeader;
  for (const FtcRow& r : rep.table)
    add_row(out.csv,
            {sc.name, std::to_string(sc.region.k()), std::to_string(sc.dim),
             std::to_string(r.points), std::to_string(r.subdivisions),
             fmt(r.lhs_norm), fmt(r.rhs_norm), fmt(r.abs_residual),
             fmt(r.rel_residual), std::to_string(r.nodes),
             timing ? fmt(r.wall_ms) : ""});

  out.pass = rep.rel_residual <= tol;
  add_line(out.summary, verdict(out.pass) + " ftc/" + sc.name +
                            ": rel residual " + fmt(rep.rel_residual) +
                            " (tolerance " + fmt(tol) + ", q=" +
                            std::to_string(quad.points) + ", m=" +
                            std::to_string(quad.subdivisions) + ")");
  for (std::size_t i = 1; i < rep.table.size(); ++i) {
    double prev = rep.table[i - 1].abs_residual;
    double cur = rep.table[i].abs_residual;
    std::string ratio = cur > 0.0 ? fmt(prev / cur) : "inf";
    add_line(out.summary,
             "       m=" + std::to_string(rep.table[i].subdivisions) +
                 ": abs residual " + fmt(cur) + " (ratio " + ratio + ")");
  }
  return out;
}

RunResult run_content(const Scenario& sc, const QuadratureSpec& quad,
                      bool timing) {
  const double tol = sc.tolerance.value_or(1e-5);
  IntegralResult v = directed_content(sc.region, quad);
  IntegralResult b = boundary_content(sc.region, quad);

  double rel = relative_residual(v.value, *sc.expect);
  double closure = b.value.inf_norm() / std::max(1.0, v.value.inf_norm());

  RunResult out;
  out.csv = kConvergenceHeader;
  const std::string k = std::to_string(sc.region.k());
  const std::string n = std::to_string(sc.dim);
  const std::string q = std::to_string(quad.points);
  const std::string m = std::to_string(quad.subdivisions);
  add_row(out.csv, {sc.name, k, n, q, m, fmt(v.value.inf_norm()),
                    fmt(sc.expect->inf_norm()),
                    fmt((v.value - *sc.expect).inf_norm()), fmt(rel),
                    std::to_string(v.node_count), timing ? fmt(0.0) : ""});
  add_row(out.csv, {sc.name + "/boundary", k, n, q, m, fmt(b.value.inf_norm()),
                    "0", fmt(b.value.inf_norm()), fmt(closure),
                    std::to_string(b.node_count), timing ? fmt(0.0) : ""});

  out.pass = rel <= tol && closure <= tol;
  add_line(out.summary,
           verdict(out.pass) + " content/" + sc.name + ": value " +
               format_multivector(v.value) + ", expected " +
               format_multivector(*sc.expect) + ", rel residual " + fmt(rel));
  add_line(out.summary,
           "       boundary closure norm " + fmt(b.value.inf_norm()));
  return out;
}

RunResult run_green(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-5);
  GreenReport rep = greens_theorem_check(
      sc.f, sc.region.parts.front().patch, quad, sc.mode);

  double rel_circ = rep.circulation_residual /
                    std::max(1.0, std::abs(rep.circulation_ccw));
  double rel_flux =
      rep.flux_residual / std::max(1.0, std::abs(rep.flux_outward));

  RunResult out;
  out.csv = kClassicalHeader;
  add_row(out.csv, {"green_circulation", sc.name, fmt(rep.curl_area_integral),
                    fmt(rep.circulation_ccw), fmt(rep.circulation_residual),
                    std::to_string(rep.nodes)});
  add_row(out.csv, {"green_flux", sc.name, fmt(rep.divergence_area_integral),
                    fmt(rep.flux_outward), fmt(rep.flux_residual),
                    std::to_string(rep.nodes)});

  out.pass =
      rel_circ <= tol && rel_flux <= tol && rep.ftc.rel_residual <= tol;
  add_line(out.summary, verdict(out.pass) + " green/" + sc.name +
                            ": circulation " + fmt(rep.circulation_ccw) +
                            " vs curl integral " +
                            fmt(rep.curl_area_integral) + " (residual " +
                            fmt(rep.circulation_residual) + ")");
  add_line(out.summary, "       flux " + fmt(rep.flux_outward) +
                            " vs divergence integral " +
                            fmt(rep.divergence_area_integral) + " (residual " +
                            fmt(rep.flux_residual) + ")");
  add_line(out.summary, "       directed identity rel residual " +
                            fmt(rep.ftc.rel_residual) + ", extraction gap " +
                            fmt(rep.extraction_gap));
  return out;
}

RunResult run_stokes(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-5);
  StokesReport rep = stokes_theorem_check(
      sc.f, sc.region.parts.front().patch, quad, sc.mode);

  double rel =
      rep.scalar_residual / std::max(1.0, std::abs(rep.circulation));

  RunResult out;
  out.csv = kClassicalHeader;
  add_row(out.csv,
          {"stokes", sc.name, fmt(rep.curl_flux), fmt(rep.circulation),
           fmt(rep.scalar_residual), std::to_string(rep.nodes)});

  out.pass = rel <= tol && rep.ftc.rel_residual <= tol;
  add_line(out.summary, verdict(out.pass) + " stokes/" + sc.name +
                            ": circulation " + fmt(rep.circulation) +
                            " vs curl flux " + fmt(rep.curl_flux) +
                            " (residual " + fmt(rep.scalar_residual) + ")");
  add_line(out.summary, "       directed identity rel residual " +
                            fmt(rep.ftc.rel_residual) + ", extraction gap " +
                            fmt(rep.extraction_gap));
  return out;
}

RunResult run_gauss(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-5);
  GaussReport rep = gauss_divergence_check(
      sc.f, sc.region.parts.front().patch, quad, sc.mode);

  double rel = rep.scalar_residual / std::max(1.0, std::abs(rep.flux));

  RunResult out;
  out.csv = kClassicalHeader;
  add_row(out.csv,
          {"gauss", sc.name, fmt(rep.divergence_integral), fmt(rep.flux),
           fmt(rep.scalar_residual), std::to_string(rep.nodes)});

  out.pass = rel <= tol && rep.ftc.rel_residual <= tol;
  add_line(out.summary, verdict(out.pass) + " gauss/" + sc.name +
                            ": divergence integral " +
                            fmt(rep.divergence_integral) + " vs flux " +
                            fmt(rep.flux) + " (residual " +
                            fmt(rep.scalar_residual) + ")");
  add_line(out.summary, "       directed identity rel residual " +
                            fmt(rep.ftc.rel_residual) + ", extraction gap " +
                            fmt(rep.extraction_gap));
  return out;
}

RunResult run_path(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-5);
  PathIndependenceReport rep = path_independence_check(
      sc.f, sc.curves[0], sc.curves[1], quad, sc.mode);

  double gap_rel =
      rep.curve_gap / std::max(1.0, rep.along_second.inf_norm());

  RunResult out;
  out.csv = kClassicalHeader;
  add_row(out.csv, {"path_first", sc.name, fmt(rep.along_first.inf_norm()),
                    fmt(rep.endpoint_difference.inf_norm()),
                    fmt(relative_residual(rep.along_first,
                                          rep.endpoint_difference)),
                    std::to_string(rep.nodes / 2)});
  add_row(out.csv, {"path_second", sc.name, fmt(rep.along_second.inf_norm()),
                    fmt(rep.endpoint_difference.inf_norm()),
                    fmt(relative_residual(rep.along_second,
                                          rep.endpoint_difference)),
                    std::to_string(rep.nodes / 2)});
  add_row(out.csv, {"path_gap", sc.name, fmt(rep.along_first.inf_norm()),
                    fmt(rep.along_second.inf_norm()), fmt(rep.curve_gap),
                    std::to_string(rep.nodes)});

  out.pass = rep.endpoint_residual <= tol && gap_rel <= tol;
  add_line(out.summary,
           verdict(out.pass) + " path/" + sc.name + ": curve integrals " +
               format_multivector(rep.along_first) + " and " +
               format_multivector(rep.along_second) + " vs endpoints " +
               format_multivector(rep.endpoint_difference));
  add_line(out.summary, "       endpoint residual " +
                            fmt(rep.endpoint_residual) + ", curve gap " +
                            fmt(rep.curve_gap));
  return out;
}

RunResult run_identities(const Scenario& sc, std::uint64_t seed) {
  const double tol = sc.tolerance.value_or(
      sc.mode == DerivMode::force_fd ? 1e-6 : 1e-12);
  std::vector<IdentityRow> rows = identity_suite(sc.dim, sc.trials, seed,
                                                 sc.mode);

  RunResult out;
  out.csv = "formula_id,trials,max_rel_err,mean_rel_err\n";
  double worst = 0.0;
  int worst_id = 0;
  for (const IdentityRow& r : rows) {
    add_row(out.csv, {std::to_string(r.formula_id), std::to_string(r.trials),
                      fmt(r.max_rel_err), fmt(r.mean_rel_err)});
    if (r.max_rel_err >= worst) {
      worst = r.max_rel_err;
      worst_id = r.formula_id;
    }
  }

  out.pass = worst <= tol;
  add_line(out.summary,
           verdict(out.pass) + " identities/" + sc.name + ": dim " +
               std::to_string(sc.dim) + ", " + std::to_string(rows.size()) +
               " formulas x " + std::to_string(sc.trials) +
               " trials, worst max rel err " + fmt(worst) + " (formula " +
               std::to_string(worst_id) + ", tolerance " + fmt(tol) + ")");
  return out;
}

RunResult run_monogenic(const Scenario& sc, std::uint64_t seed) {
  SampleSpec ss{sc.samples, seed, sc.exclusion_radius};
  MonogenicityReport rep =
      monogenicity_certificate(sc.f, *sc.box, ss, sc.mode);
  const double tol = sc.tolerance.value_or(rep.tolerance);

  RunResult out;
  out.csv = kClassicalHeader;
  add_row(out.csv,
          {"monogenic", sc.name, fmt(rep.max_residual), fmt(tol),
           fmt(rep.max_residual), std::to_string(rep.samples)});

  out.pass = rep.max_residual <= tol;
  add_line(out.summary, verdict(out.pass) + " monogenic/" + sc.name + ": " +
                            std::to_string(rep.samples) +
                            " samples, max |del f| " + fmt(rep.max_residual) +
                            " (tolerance " + fmt(tol) + ")");
  return out;
}

RunResult run_cauchy(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-6);
  RunResult out;
  out.csv = kReconstructionHeader;
  out.pass = true;
  for (const Eigen::VectorXd& pt : sc.points) {
    CauchyReport rep = cauchy_reconstruct(sc.f, sc.boundary, pt, quad);
    add_row(out.csv, {std::to_string(sc.dim), sc.name, fmt_point(pt),
                      format_multivector(rep.direct),
                      format_multivector(rep.reconstructed), fmt(rep.abs_err),
                      std::to_string(rep.nodes), "0"});
    bool ok = rep.abs_err <= tol;
    out.pass = out.pass && ok;
    std::string line = verdict(ok) + " cauchy/" + sc.name + " at (" +
                       fmt_point(pt) + "): err " + fmt(rep.abs_err) +
                       " (tolerance " + fmt(tol) + ")";
    if (rep.near_boundary)
      line += " [point within " + fmt(rep.margin) +
              " of the boundary, quadrature may be unresolved]";
    add_line(out.summary, line);
  }
  return out;
}

RunResult run_cauchy_full(const Scenario& sc, const QuadratureSpec& quad) {
  const double tol = sc.tolerance.value_or(1e-3);
  RunResult out;
  out.csv = kReconstructionHeader;
  out.pass = true;
  for (const Eigen::VectorXd& pt : sc.points) {
    FullCauchyReport rep =
        full_cauchy_formula(sc.f, *sc.volume, pt, quad, sc.mode);
    add_row(out.csv, {std::to_string(sc.dim), sc.name, fmt_point(pt),
                      format_multivector(rep.direct),
                      format_multivector(rep.reconstructed), fmt(rep.abs_err),
                      std::to_string(rep.nodes), fmt(rep.excluded_radius)});
    bool ok = rep.abs_err <= tol;
    out.pass = out.pass && ok;
    add_line(out.summary,
             verdict(ok) + " cauchy_full/" + sc.name + " at (" +
                 fmt_point(pt) + "): err " + fmt(rep.abs_err) +
                 " (tolerance " + fmt(tol) + ", excluded ball r0 " +
                 fmt(rep.excluded_radius) + ", bound " +
                 fmt(rep.excluded_error_bound) + ")");
  }
  return out;
}

}  // namespace

std::string check_kind_name(CheckKind k) {
  for (const CheckName& c : kCheckNames)
    if (c.kind == k) return c.name;
  return "unknown";
}

Scenario parse_scenario(const std::string& json_text) {
  ojson doc = detail::parse_text(json_text);
  try {
    return build_scenario(doc);
  } catch (const nlohmann::json::exception& e) {
    // Semantic accessors validate types first, so this is a safety net.
    throw ParseError(e.what(), 0, 0);
  }
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string print_scenario(const Scenario& sc) { return sc.canonical; }

RunResult run_scenario(const Scenario& sc, const RunOptions& opts) {
  QuadratureSpec quad = sc.quad;
  if (opts.points) quad.points = *opts.points;
  if (opts.subdivisions) quad.subdivisions = *opts.subdivisions;
  if (opts.threads) quad.threads = *opts.threads;
  quad.validate();
  const std::uint64_t seed = opts.seed.value_or(sc.seed);

  switch (sc.check) {
    case CheckKind::ftc:
      return run_ftc(sc, quad, opts.timing);
    case CheckKind::content:
      return run_content(sc, quad, opts.timing);
    case CheckKind::green:
      return run_green(sc, quad);
    case CheckKind::stokes:
      return run_stokes(sc, quad);
    case CheckKind::gauss:
      return run_gauss(sc, quad);
    case CheckKind::path:
      return run_path(sc, quad);
    case CheckKind::identities:
      return run_identities(sc, seed);
    case CheckKind::monogenic:
      return run_monogenic(sc, seed);
    case CheckKind::cauchy:
      return run_cauchy(sc, quad);
    case CheckKind::cauchy_full:
      return run_cauchy_full(sc, quad);
  }
  throw DomainError("unhandled check kind");
}

}  // namespace gcalc

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcalc/classical.hpp"
#include "gcalc/monogenic.hpp"

namespace gcalc {

enum class CheckKind {
  ftc,         ///< directed volume integral against the boundary integral
  content,     ///< directed content against a reference value, plus closure
  green,       ///< both planar forms of Green's theorem
  stokes,      ///< curl flux against boundary circulation in R^3
  gauss,       ///< divergence integral against outward flux, k = n
  path,        ///< gradient integrals along two curves with shared endpoints
  identities,  ///< randomized vector-derivative identity suite
  monogenic,   ///< |del f| sampling certificate
  cauchy,      ///< boundary-only reconstruction of a monogenic field
  cauchy_full, ///< reconstruction with the volume correction term
};

std::string check_kind_name(CheckKind k);

/// A parsed, fully validated scenario document.  Geometry and fields are
/// already constructed; `canonical` holds the canonical JSON re-emission.
struct Scenario {
  std::string name;
  CheckKind check = CheckKind::ftc;
  int dim = 0;

  PatchComplex region;             ///< ftc, content, green, stokes, gauss
  std::vector<PatchMap> curves;    ///< path: exactly two
  PatchComplex boundary;           ///< cauchy
  std::optional<PatchMap> volume;  ///< cauchy_full
  std::optional<KRectangle> box;   ///< monogenic sampling region
  std::vector<Eigen::VectorXd> points;  ///< cauchy evaluation points

  FieldFn f;
  FieldFn g;                          ///< ftc weight factor, defaults to 1
  std::optional<Multivector> expect;  ///< content reference value

  QuadratureSpec quad;
  std::optional<double> tolerance;  ///< unset: the check's own default
  DerivMode mode = DerivMode::automatic;
  int refinements = 3;
  long trials = 200;
  long samples = 200;
  double exclusion_radius = 0.25;
  std::uint64_t seed = kDefaultSeed;

  std::string canonical;
};

/// Parse and validate a scenario document.  JSON syntax errors raise
/// ParseError with 1-based line/column; keys outside the schema raise
/// UnknownKey; dimensional conflicts raise DimensionMismatch.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

/// Canonical form: schema-ordered keys with defaults materialized.
/// Parsing the canonical text yields the identical canonical text back.
std::string print_scenario(const Scenario& sc);

struct RunOptions {
  std::optional<int> points;        ///< override quadrature q
  std::optional<int> subdivisions;  ///< override quadrature m
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  bool timing = false;  ///< when false the wall_ms CSV column stays empty
};

struct RunResult {
  bool pass = false;
  std::string summary;  ///< one human-readable line per sub-check
  std::string csv;      ///< schema depends on the check kind, see README
};

/// Execute the scenario's check.  With timing off the CSV is byte-identical
/// across runs and thread counts.
RunResult run_scenario(const Scenario& sc, const RunOptions& opts = {});

}  // namespace gcalc

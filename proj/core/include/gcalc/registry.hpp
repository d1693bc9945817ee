#pragma once

#include <string>
#include <vector>

#include "gcalc/field.hpp"
#include "gcalc/patch.hpp"

namespace gcalc {

/// One row of the builder catalogs, for --list-patches and --list-fields.
struct CatalogEntry {
  std::string name;
  std::string parameters;
  std::string blurb;
};

const std::vector<CatalogEntry>& patch_catalog();
const std::vector<CatalogEntry>& boundary_catalog();
const std::vector<CatalogEntry>& field_catalog();

/// Build a patch from a JSON object, e.g.
///   {"type": "disk_polar", "radius": 2}
/// Unknown types and keys raise UnknownKey; malformed values raise
/// ParseError; dimension conflicts raise DimensionMismatch.
PatchMap make_patch(const std::string& json_text);

/// Build a closed boundary chain, e.g. {"type": "circle", "radius": 1}.
PatchComplex make_boundary(const std::string& json_text);

/// Build a field living in R^dim, e.g. {"type": "poly", "terms": "x1*e2"}.
FieldFn make_field(const std::string& json_text, int dim);

}  // namespace gcalc

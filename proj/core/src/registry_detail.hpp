#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include <json.hpp>

#include "gcalc/field.hpp"
#include "gcalc/patch.hpp"

namespace gcalc::detail {

/// Insertion-ordered documents keep the canonical re-emission stable.
using ojson = nlohmann::ordered_json;

/// Parse JSON text, translating syntax errors to gcalc::ParseError with
/// 1-based line/column coordinates.
ojson parse_text(const std::string& text);

std::pair<int, int> line_col_at(const std::string& text, std::size_t byte);

/// Reject keys outside `allowed`; `where` names the object in messages.
void check_keys(const ojson& obj, std::initializer_list<const char*> allowed,
                const std::string& where);

const ojson& require(const ojson& obj, const char* key,
                     const std::string& where);

double num(const ojson& v, const std::string& where);
int integer(const ojson& v, const std::string& where);
std::string str(const ojson& v, const std::string& where);
/// Numeric array; expect >= 0 pins the length.
Eigen::VectorXd vec(const ojson& v, const std::string& where, int expect = -1);

/// Builders keyed by the object's "type".  expected_dim of 0 accepts any
/// ambient dimension.
PatchMap patch_from_json(const ojson& obj, int expected_dim);
PatchComplex boundary_from_json(const ojson& obj);
FieldFn field_from_json(const ojson& obj, int dim);

}  // namespace gcalc::detail

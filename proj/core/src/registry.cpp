#include "gcalc/registry.hpp"

#include <algorithm>
#include <complex>

#include "gcalc/mv_format.hpp"
#include "gcalc/patches.hpp"
#include "gcalc/poly_field.hpp"
#include "registry_detail.hpp"

namespace gcalc::detail {

ojson parse_text(const std::string& text) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte);
    throw ParseError(e.what(), line, col);
  }
}

std::pair<int, int> line_col_at(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  std::size_t limit = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void check_keys(const ojson& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!obj.is_object())
    throw ParseError(where + ": expected a JSON object", 0, 0);
  for (const auto& item : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const char* k) { return item.key() == k; });
    if (!ok) throw UnknownKey(where + "." + item.key());
  }
}

const ojson& require(const ojson& obj, const char* key,
                     const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(where + ": missing required key '" + key + "'", 0, 0);
  return *it;
}

double num(const ojson& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + ": expected a number", 0, 0);
  return v.get<double>();
}

int integer(const ojson& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected an integer", 0, 0);
  return v.get<int>();
}

std::string str(const ojson& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string", 0, 0);
  return v.get<std::string>();
}

Eigen::VectorXd vec(const ojson& v, const std::string& where, int expect) {
  if (!v.is_array())
    throw ParseError(where + ": expected an array of numbers", 0, 0);
  if (expect >= 0 && static_cast<int>(v.size()) != expect)
    throw DimensionMismatch(where + ": expected " + std::to_string(expect) +
                            " entries, got " + std::to_string(v.size()));
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[static_cast<int>(i)] = num(v[i], where);
  return out;
}

namespace {

PatchMap box_patch(std::vector<Interval> bounds) {
  KRectangle dom(std::move(bounds));
  const int k = dom.k();
  PatchMap p{dom,
             k,
             [](const Eigen::VectorXd& s) { return s; },
             [k](const Eigen::VectorXd&) {
               return Eigen::MatrixXd::Identity(k, k).eval();
             },
             Smoothness::smooth,
             "box"};
  return p;
}

PatchMap graph_patch_from_poly(const std::string& height) {
  for (const PolyTerm& t : parse_poly(height, 2))
    if (t.blade != 0)
      throw ParseError("graph2d height must be a scalar polynomial", 0, 0);
  FieldFn hf = poly_field(2, height);
  auto h = [hf](double a, double b) {
    Eigen::VectorXd s(2);
    s << a, b;
    return hf(s).scalar_part();
  };
  auto grad = [hf](double a, double b) {
    Eigen::VectorXd s(2);
    s << a, b;
    Eigen::VectorXd e1 = Eigen::VectorXd::Unit(2, 0);
    Eigen::VectorXd e2 = Eigen::VectorXd::Unit(2, 1);
    return Eigen::Vector2d(hf.deriv(s, e1).scalar_part(),
                           hf.deriv(s, e2).scalar_part());
  };
  return graph2d_patch(h, grad);
}

FieldFn complex_poly_field(std::vector<double> cs) {
  if (cs.empty())
    throw ParseError("complex_poly needs at least one coefficient", 0, 0);
  FieldFn f;
  f.ambient_dim = 2;
  f.smoothness = Smoothness::smooth;
  f.name = "complex_poly";
  f.eval = [cs](const Eigen::VectorXd& x) {
    std::complex<double> z(x[0], x[1]);
    std::complex<double> w = 0.0;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) w = w * z + *it;
    Multivector m{2};
    m[0] = w.real();
    m[3] = w.imag();
    return m;
  };
  f.deriv = [cs](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    std::complex<double> z(x[0], x[1]);
    std::complex<double> dw = 0.0;
    for (std::size_t p = cs.size(); p-- > 1;)
      dw = dw * z + static_cast<double>(p) * cs[p];
    std::complex<double> d = dw * std::complex<double>(v[0], v[1]);
    Multivector m{2};
    m[0] = d.real();
    m[3] = d.imag();
    return m;
  };
  return f;
}

}  // namespace

PatchMap patch_from_json(const ojson& obj, int expected_dim) {
  const std::string where = "patch";
  std::string type = str(require(obj, "type", where), where + ".type");
  PatchMap p = [&]() -> PatchMap {
    if (type == "identity") {
      check_keys(obj, {"type", "k", "n"}, where);
      int k = integer(require(obj, "k", where), where + ".k");
      int n = obj.contains("n") ? integer(obj.at("n"), where + ".n") : k;
      return identity_patch(k, n);
    }
    if (type == "figure2") {
      check_keys(obj, {"type"}, where);
      return bent_sheet_patch();
    }
    if (type == "disk_polar") {
      check_keys(obj, {"type", "radius"}, where);
      return disk_polar_patch(num(require(obj, "radius", where), where));
    }
    if (type == "sphere_octant") {
      check_keys(obj, {"type", "radius"}, where);
      return sphere_octant_patch(num(require(obj, "radius", where), where));
    }
    if (type == "linear") {
      check_keys(obj, {"type", "columns"}, where);
      const ojson& cols = require(obj, "columns", where);
      if (!cols.is_array() || cols.empty())
        throw ParseError("patch.columns: expected an array of columns", 0, 0);
      Eigen::VectorXd c0 = vec(cols[0], where + ".columns");
      Eigen::MatrixXd a(c0.size(), static_cast<int>(cols.size()));
      a.col(0) = c0;
      for (int j = 1; j < a.cols(); ++j)
        a.col(j) = vec(cols[j], where + ".columns",
                       static_cast<int>(c0.size()));
      return linear_patch(a);
    }
    if (type == "graph2d") {
      check_keys(obj, {"type", "height"}, where);
      return graph_patch_from_poly(
          str(require(obj, "height", where), where + ".height"));
    }
    if (type == "segment") {
      check_keys(obj, {"type", "from", "to"}, where);
      Eigen::VectorXd a = vec(require(obj, "from", where), where + ".from");
      Eigen::VectorXd b = vec(require(obj, "to", where), where + ".to",
                              static_cast<int>(a.size()));
      return segment_patch(a, b);
    }
    if (type == "arc") {
      check_keys(obj, {"type", "center", "radius", "from_angle", "to_angle"},
                 where);
      Eigen::VectorXd c = vec(require(obj, "center", where), where, 2);
      return arc_patch(Eigen::Vector2d(c[0], c[1]),
                       num(require(obj, "radius", where), where),
                       num(require(obj, "from_angle", where), where),
                       num(require(obj, "to_angle", where), where));
    }
    if (type == "box") {
      check_keys(obj, {"type", "bounds"}, where);
      const ojson& bs = require(obj, "bounds", where);
      if (!bs.is_array() || bs.empty())
        throw ParseError("patch.bounds: expected an array of [lo, hi] pairs",
                         0, 0);
      std::vector<Interval> bounds;
      for (const ojson& b : bs) {
        Eigen::VectorXd iv = vec(b, where + ".bounds", 2);
        bounds.push_back(Interval{iv[0], iv[1]});
      }
      return box_patch(std::move(bounds));
    }
    throw UnknownKey("patch type '" + type + "'");
  }();
  if (expected_dim > 0 && p.ambient_dim != expected_dim)
    throw DimensionMismatch("patch lives in dimension " +
                            std::to_string(p.ambient_dim) + ", expected " +
                            std::to_string(expected_dim));
  return p;
}

PatchComplex boundary_from_json(const ojson& obj) {
  const std::string where = "boundary";
  std::string type = str(require(obj, "type", where), where + ".type");
  if (type == "circle") {
    check_keys(obj, {"type", "radius", "center"}, where);
    Eigen::Vector2d center(0.0, 0.0);
    if (obj.contains("center")) {
      Eigen::VectorXd c = vec(obj.at("center"), where + ".center", 2);
      center = Eigen::Vector2d(c[0], c[1]);
    }
    return circle_boundary(num(require(obj, "radius", where), where), center);
  }
  if (type == "sphere") {
    check_keys(obj, {"type", "radius", "center"}, where);
    PatchComplex sb =
        sphere_boundary(num(require(obj, "radius", where), where));
    if (obj.contains("center")) {
      Eigen::VectorXd c = vec(obj.at("center"), where + ".center", 3);
      for (OrientedPatch& part : sb.parts) {
        auto base = part.patch.map;
        part.patch.map = [base, c](const Eigen::VectorXd& s) -> Eigen::VectorXd {
          return base(s) + c;
        };
      }
    }
    return sb;
  }
  throw UnknownKey("boundary type '" + type + "'");
}

FieldFn field_from_json(const ojson& obj, int dim) {
  const std::string where = "field";
  std::string type = str(require(obj, "type", where), where + ".type");
  if (type == "constant") {
    check_keys(obj, {"type", "value"}, where);
    return constant_field(
        dim, parse_multivector(str(require(obj, "value", where), where), dim));
  }
  if (type == "identity_vector") {
    check_keys(obj, {"type"}, where);
    return identity_field(dim);
  }
  if (type == "poly") {
    check_keys(obj, {"type", "terms"}, where);
    return poly_field(dim, str(require(obj, "terms", where), where));
  }
  if (type == "complex_power") {
    check_keys(obj, {"type", "power"}, where);
    if (dim != 2)
      throw DimensionMismatch("complex_power fields live in dimension 2");
    return complex_power_field(integer(require(obj, "power", where), where));
  }
  if (type == "complex_poly") {
    check_keys(obj, {"type", "coefficients"}, where);
    if (dim != 2)
      throw DimensionMismatch("complex_poly fields live in dimension 2");
    const ojson& cs = require(obj, "coefficients", where);
    if (!cs.is_array())
      throw ParseError("field.coefficients: expected an array", 0, 0);
    std::vector<double> coeffs;
    for (const ojson& c : cs) coeffs.push_back(num(c, where + ".coefficients"));
    return complex_poly_field(std::move(coeffs));
  }
  if (type == "cauchy_kernel") {
    check_keys(obj, {"type", "source"}, where);
    return cauchy_kernel_field(
        dim, vec(require(obj, "source", where), where + ".source", dim));
  }
  throw UnknownKey("field type '" + type + "'");
}

}  // namespace gcalc::detail

namespace gcalc {

const std::vector<CatalogEntry>& patch_catalog() {
  static const std::vector<CatalogEntry> entries{
      {"identity", "k, n?", "embedding of [0,1]^k into the first k axes of R^n"},
      {"figure2", "", "bent sheet over the unit square in R^3"},
      {"disk_polar", "radius", "planar disk in polar parameters"},
      {"sphere_octant", "radius", "one octant of a sphere in R^3"},
      {"linear", "columns", "s -> A s over [0,1]^k, columns of A given"},
      {"graph2d", "height", "surface (s1, s2, h) over [0,1]^2, h a polynomial"},
      {"segment", "from, to", "straight segment, parameter in [0,1]"},
      {"arc", "center, radius, from_angle, to_angle", "circular arc in R^2"},
      {"box", "bounds", "identity patch over a general axis-aligned box"},
  };
  return entries;
}

const std::vector<CatalogEntry>& boundary_catalog() {
  static const std::vector<CatalogEntry> entries{
      {"circle", "radius, center?", "circle in R^2, outward-normal orientation"},
      {"sphere", "radius, center?",
       "sphere in R^3 from six cube faces, outward-normal orientation"},
  };
  return entries;
}

const std::vector<CatalogEntry>& field_catalog() {
  static const std::vector<CatalogEntry> entries{
      {"constant", "value", "constant multivector, value in e-notation text"},
      {"identity_vector", "", "f(x) = x"},
      {"poly", "terms", "multivector polynomial, e.g. \"x1^2*e1 - 2*x2*e12\""},
      {"complex_power", "power", "G_2 embedding of z^p"},
      {"complex_poly", "coefficients", "G_2 embedding of sum c_p z^p"},
      {"cauchy_kernel", "source", "(x - source) / |x - source|^n"},
  };
  return entries;
}

PatchMap make_patch(const std::string& json_text) {
  return detail::patch_from_json(detail::parse_text(json_text), 0);
}

PatchComplex make_boundary(const std::string& json_text) {
  return detail::boundary_from_json(detail::parse_text(json_text));
}

FieldFn make_field(const std::string& json_text, int dim) {
  return detail::field_from_json(detail::parse_text(json_text), dim);
}

}  // namespace gcalc

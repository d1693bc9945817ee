#include "gcalc/poly_field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <tuple>

#include "gcalc/mv_format.hpp"

namespace gcalc {
namespace {

using Poly = std::vector<PolyTerm>;

double ipow(double x, int p) {
  double r = 1.0;
  for (; p > 0; --p) r *= x;
  return r;
}

void negate(Poly& p) {
  for (PolyTerm& t : p) t.coef = -t.coef;
}

Poly multiply(const Poly& a, const Poly& b, int dim) {
  Poly out;
  out.reserve(a.size() * b.size());
  for (const PolyTerm& ta : a)
    for (const PolyTerm& tb : b) {
      PolyTerm t;
      t.coef = ta.coef * tb.coef * blade_product_sign(ta.blade, tb.blade);
      t.blade = ta.blade ^ tb.blade;
      t.powers.resize(dim);
      for (int i = 0; i < dim; ++i) t.powers[i] = ta.powers[i] + tb.powers[i];
      out.push_back(std::move(t));
    }
  return out;
}

Poly canonicalize(Poly p) {
  std::sort(p.begin(), p.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return std::tie(a.blade, a.powers) < std::tie(b.blade, b.powers);
  });
  Poly out;
  for (PolyTerm& t : p) {
    if (!out.empty() && out.back().blade == t.blade &&
        out.back().powers == t.powers) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const PolyTerm& t) { return t.coef == 0.0; }),
            out.end());
  return out;
}

class PolyParser {
 public:
  PolyParser(const std::string& src, int dim) : src_(src), dim_(dim) {}

  Poly run() {
    Poly p = parse_field();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected trailing input");
    return canonicalize(std::move(p));
  }

 private:
  Poly parse_field() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = take() == '-';
    Poly acc = parse_term();
    if (neg) negate(acc);
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Poly t = parse_term();
      if (c == '-') negate(t);
      acc.insert(acc.end(), t.begin(), t.end());
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      take();
      acc = multiply(acc, parse_factor(), dim_);
    }
    return acc;
  }

  Poly parse_factor() {
    skip_ws();
    char c = peek();
    Poly base;
    if (c == '(') {
      take();
      base = parse_field();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
    } else if (c == 'x') {
      take();
      int i = parse_int("coordinate index");
      if (i < 1 || i > dim_) fail("coordinate index out of range");
      PolyTerm t{1.0, std::vector<int>(dim_, 0), 0};
      t.powers[i - 1] = 1;
      base.push_back(std::move(t));
    } else if (c == 'e') {
      take();
      base.push_back(parse_blade());
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      base.push_back(parse_number());
    } else {
      fail("expected a number, coordinate, blade, or '('");
    }
    skip_ws();
    if (peek() == '^') {
      take();
      int p = parse_int("exponent");
      Poly r{PolyTerm{1.0, std::vector<int>(dim_, 0), 0}};
      for (; p > 0; --p) r = multiply(r, base, dim_);
      base = std::move(r);
    }
    return base;
  }

  PolyTerm parse_blade() {
    // 'e' already consumed
    BladeIndex bits = 0;
    int last = 0;
    bool any = false;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      int idx = take() - '0';
      if (idx == 0) fail("blade indices are 1-based");
      if (idx <= last) fail("blade indices must be strictly ascending");
      if (idx > dim_) fail("blade index exceeds the field dimension");
      bits |= BladeIndex{1} << (idx - 1);
      last = idx;
      any = true;
    }
    if (!any) fail("expected blade indices after 'e'");
    return PolyTerm{1.0, std::vector<int>(dim_, 0), bits};
  }

  PolyTerm parse_number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    for (const char* q = begin; q != end; ++q) take();
    return PolyTerm{v, std::vector<int>(dim_, 0), 0};
  }

  int parse_int(const std::string& what) {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer " + what);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000) fail(what + " is too large");
    }
    return static_cast<int>(v);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  char peek() {
    skip_ws();
    return peek_raw();
  }
  char peek_raw() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char take() {
    char c = src_[pos_++];
    ++col_;
    return c;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  const std::string& src_;
  int dim_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string blade_suffix(BladeIndex bits) {
  std::string s = "e";
  for (int i = 0; i < kMaxDim; ++i)
    if (bits & (BladeIndex{1} << i)) s += static_cast<char>('1' + i);
  return s;
}

}  // namespace

std::vector<PolyTerm> parse_poly(const std::string& src, int dim) {
  if (dim < 1 || dim > 9)
    throw DimensionMismatch(
        "polynomial fields use single-digit indices, dimension must be 1..9");
  return PolyParser(src, dim).run();
}

std::string format_poly(const std::vector<PolyTerm>& terms, int dim) {
  Poly canon = canonicalize(terms);
  std::string out;
  for (const PolyTerm& t : canon) {
    const bool neg = std::signbit(t.coef);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string body;
    for (int i = 0; i < dim; ++i) {
      if (t.powers[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(i + 1);
      if (t.powers[i] > 1) body += "^" + std::to_string(t.powers[i]);
    }
    if (t.blade != 0) {
      if (!body.empty()) body += "*";
      body += blade_suffix(t.blade);
    }
    double mag = std::abs(t.coef);
    if (body.empty()) {
      out += format_double(mag);
    } else if (mag == 1.0) {
      out += body;
    } else {
      out += format_double(mag) + "*" + body;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

Multivector eval_poly(const std::vector<PolyTerm>& terms, int dim,
                      const Eigen::VectorXd& x) {
  if (x.size() != dim)
    throw DimensionMismatch("evaluation point has the wrong dimension");
  Multivector out{dim};
  for (const PolyTerm& t : terms) {
    double v = t.coef;
    for (int i = 0; i < dim; ++i) v *= ipow(x[i], t.powers[i]);
    out[t.blade] += v;
  }
  return out;
}

FieldFn poly_field(int dim, const std::string& source) {
  auto terms = std::make_shared<const std::vector<PolyTerm>>(
      parse_poly(source, dim));

  FieldFn f;
  f.ambient_dim = dim;
  f.smoothness = Smoothness::smooth;
  f.name = format_poly(*terms, dim);
  f.eval = [terms, dim](const Eigen::VectorXd& x) {
    return eval_poly(*terms, dim, x);
  };
  f.deriv = [terms, dim](const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
    Multivector out{dim};
    for (const PolyTerm& t : *terms) {
      for (int j = 0; j < dim; ++j) {
        if (t.powers[j] == 0 || v[j] == 0.0) continue;
        double c = t.coef * t.powers[j] * v[j] * ipow(x[j], t.powers[j] - 1);
        for (int i = 0; i < dim; ++i)
          if (i != j) c *= ipow(x[i], t.powers[i]);
        out[t.blade] += c;
      }
    }
    return out;
  };
  return f;
}

}  // namespace gcalc

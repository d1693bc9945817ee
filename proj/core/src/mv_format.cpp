#include "gcalc/mv_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>

namespace gcalc {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string blade_suffix(BladeIndex bits) {
  std::string s = "e";
  for (int i = 0; i < kMaxDim; ++i)
    if (bits & (BladeIndex{1} << i)) s += static_cast<char>('1' + i);
  return s;
}

}  // namespace

std::string format_multivector(const Multivector& m) {
  std::string out;
  for (BladeIndex b = 0; b < m.coeff_count(); ++b) {
    double c = m[b];
    if (c == 0.0) continue;
    const bool neg = std::signbit(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const double mag = std::abs(c);
    if (b == 0) {
      out += format_double(mag);
    } else if (mag == 1.0) {
      out += blade_suffix(b);
    } else {
      out += format_double(mag);
      out += "*";
      out += blade_suffix(b);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  int col() const { return static_cast<int>(i) + 1; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(col()), 1, col());
  }
};

double parse_number(Cursor& c) {
  c.skip_ws();
  const char* begin = c.s.c_str() + c.i;
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end == begin) c.fail("expected a number");
  c.i += static_cast<std::size_t>(end - begin);
  return v;
}

BladeIndex parse_blade(Cursor& c, int dim) {
  // caller has checked peek() == 'e'
  ++c.i;
  BladeIndex bits = 0;
  int last = 0;
  bool any = false;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    int idx = c.s[c.i] - '0';
    if (idx == 0) c.fail("blade indices are 1-based");
    if (idx <= last) c.fail("blade indices must be strictly ascending");
    if (idx > dim) c.fail("blade index exceeds algebra dimension");
    bits |= BladeIndex{1} << (idx - 1);
    last = idx;
    any = true;
    ++c.i;
  }
  if (!any) c.fail("expected blade indices after 'e'");
  return bits;
}

}  // namespace

Multivector parse_multivector(const std::string& text, int dim) {
  Multivector m{dim};
  Cursor c{text};
  if (c.done()) throw ParseError("empty multivector literal", 1, 1);

  bool first = true;
  while (!c.done()) {
    double sign = 1.0;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1.0;
      ++c.i;
      c.skip_ws();
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }

    double coef = 1.0;
    BladeIndex bits = 0;
    if (c.peek() == 'e') {
      bits = parse_blade(c, dim);
    } else {
      coef = parse_number(c);
      c.skip_ws();
      if (c.peek() == '*') {
        ++c.i;
        c.skip_ws();
        if (c.peek() != 'e') c.fail("expected a blade after '*'");
        bits = parse_blade(c, dim);
      }
    }
    m[bits] += sign * coef;
    first = false;
  }
  return m;
}

}  // namespace gcalc

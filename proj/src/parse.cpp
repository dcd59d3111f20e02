#include "wcc/parse.hpp"

#include <cctype>
#include <vector>

#include "wcc/errors.hpp"

namespace wcc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  MPoly parse_all() {
    MPoly lhs = expr();
    skip();
    if (peek() == '=') {
      ++pos_;
      MPoly rhs = expr();
      lhs = lhs - rhs;
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly r = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        r = r + term();
      } else if (c == '-') {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  MPoly term() {
    MPoly r = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r = r * unary();
      } else if (c == '/') {
        ++pos_;
        MPoly d = unary();
        if (!d.is_constant()) fail("division by a non-constant");
        FieldElem v = d.constant_term();
        if (v.is_zero()) fail("division by zero");
        r = r.scaled(v.inv());
      } else if (starts_factor(c)) {
        r = r * power();
      } else {
        return r;
      }
    }
  }

  MPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 3) fail("exponent too large");
      return pow(base, std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  MPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::constant(FieldElem(Rational(BigInt(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "r2") return MPoly::constant(FieldElem::sqrt2());
      if (id == "i") return MPoly::constant(FieldElem::imag());
      static const char* vars[5] = {"t", "x", "T", "X", "Z"};
      for (int k = 0; k < 5; ++k)
        if (id == vars[k]) return MPoly::var(k);
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected input");
  }

  std::string s_;
  size_t pos_ = 0;
};

std::vector<std::string> split_top(const std::string& s, char open, char close) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw ParseError(std::string("expected ") + open + "..." + close + ": " + s);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (size_t k = 1; k + 1 < t.size(); ++k) {
    char c = t[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

}  // namespace

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

MPoly parse_mpoly(const std::string& text) { return Parser(text).parse_all(); }

Poly parse_poly(const std::string& text) { return parse_mpoly(text).to_poly(); }

BiPoly parse_bipoly(const std::string& text) { return parse_mpoly(text).to_bipoly(); }

TriForm parse_form(const std::string& text) { return parse_mpoly(text).to_triform(); }

Vec3 parse_point(const std::string& text) {
  auto parts = split_top(text, '[', ']');
  if (parts.size() != 3) throw ParseError("a point needs three coordinates: " + text);
  Vec3 p;
  for (int k = 0; k < 3; ++k) p[k] = parse_field(parts[k]);
  return p;
}

Matrix3 parse_matrix(const std::string& text) {
  auto rows = split_top(text, '[', ']');
  if (rows.size() != 3) throw ParseError("a matrix needs three rows: " + text);
  std::array<Vec3, 3> m;
  for (int k = 0; k < 3; ++k) m[k] = parse_point(rows[k]);
  return Matrix3(m);
}

std::pair<Poly, Poly> parse_pair(const std::string& text) {
  auto parts = split_top(text, '(', ')');
  if (parts.size() != 2) throw ParseError("a section needs two coordinates: " + text);
  return {parse_poly(parts[0]), parse_poly(parts[1])};
}

}  // namespace wcc

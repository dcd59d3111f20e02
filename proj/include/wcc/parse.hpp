#pragma once

#include <string>

#include "wcc/forms.hpp"

namespace wcc {

// Grammar: sums, differences, products (explicit `*` or juxtaposition),
// division by constants, `^` with a non-negative integer exponent,
// parentheses, integer literals, `r2`, `i`, and the variables t, x, T, X, Z.
// An optional `lhs = rhs` is read as lhs - rhs.
MPoly parse_mpoly(const std::string& text);

Poly parse_poly(const std::string& text);
BiPoly parse_bipoly(const std::string& text);
TriForm parse_form(const std::string& text);

// "[a, b, c]"
Vec3 parse_point(const std::string& text);
// "[[a,b,c],[d,e,f],[g,h,k]]"
Matrix3 parse_matrix(const std::string& text);
// "(x(t), y(t))"
std::pair<Poly, Poly> parse_pair(const std::string& text);

std::string trim(const std::string& s);

}  // namespace wcc

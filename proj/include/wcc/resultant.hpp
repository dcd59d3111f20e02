#pragma once

#include <vector>

#include "wcc/forms.hpp"

namespace wcc {

// Resultants with respect to x of polynomials over K[t] (BiPoly).
Poly resultant(const BiPoly& p, const BiPoly& q);
// Same value via the Bareiss determinant of the Sylvester matrix.
Poly resultant_sylvester(const BiPoly& p, const BiPoly& q);
// j-th subresultant as a determinant polynomial.
BiPoly subresultant(const BiPoly& p, const BiPoly& q, int j);
// [p, q, S_{n-1}, ..., S_0] with deg_x p >= deg_x q = n (inputs swapped if needed).
std::vector<BiPoly> subresultant_chain(const BiPoly& p, const BiPoly& q);

Poly det_bareiss(std::vector<std::vector<Poly>> m);

}  // namespace wcc

#pragma once

#include <vector>

#include "wcc/poly.hpp"

namespace wcc {

// All distinct roots of p lying in K, sorted. Exact: roots are recovered
// p-adically in the four embeddings of K and every candidate is verified.
std::vector<FieldElem> k_roots(const Poly& p);

// Square root in K with positive leading sign; false when a is not a square.
bool field_sqrt(const FieldElem& a, FieldElem& root);

}  // namespace wcc

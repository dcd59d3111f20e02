#pragma once

#include <vector>

#include "wcc/ellsurface.hpp"

namespace wcc {

using RatMatrix = std::vector<std::vector<Rational>>;

// Correction term of a fiber for sections meeting components i and j.
Rational contribution(const FiberInfo& f, int i, int j);
Rational contribution(Kodaira type, int n, int i, int j);

struct HeightContext {
  WeierstrassModel model;
  std::vector<FiberInfo> fibers;
  int residual_euler = 0;

  // Fibers from classify_fibers, oriented by `designated` when given.
  static HeightContext build(const WeierstrassModel& m, const Section* designated = nullptr);
  std::vector<int> psi(const Section& p) const;
};

// (P . O), from the poles of x(P).
int section_zero_intersection(const Section& p);
// (P . Q) for distinct sections of the stratum; computed as ((P - Q) . O)
// and cross-checked against the local rule at smooth meeting points.
int section_intersection(const HeightContext& ctx, const Section& p, const Section& q);

Rational height(const HeightContext& ctx, const Section& p, const Section& q);
RatMatrix gram_matrix(const HeightContext& ctx, const std::vector<Section>& basis);

bool is_positive_definite(const RatMatrix& g);
Rational determinant(const RatMatrix& g);

}  // namespace wcc

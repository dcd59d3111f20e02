#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wcc/ellsurface.hpp"
#include "wcc/mwheight.hpp"

namespace wcc {

enum class FiberRole { Node1, Node2, Cusp, Infinity };
std::string role_name(FiberRole r);

struct CaseFiber {
  FiberRole role;
  Kodaira type;
  int n;               // for I_n
  std::vector<int> psi;  // component index of each basis vector
  int components() const;
};

using LatticeVector = std::vector<long>;

class CaseLattice {
 public:
  // "I", "II", "III" or "IV"; throws PreconditionError otherwise.
  static CaseLattice get(const std::string& id);
  static std::vector<std::string> ids() { return {"I", "II", "III", "IV"}; }

  const std::string& id() const { return id_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const RatMatrix& gram() const { return gram_; }
  const std::vector<CaseFiber>& fibers() const { return fibers_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const CaseFiber* fiber(FiberRole r) const;

  Rational pair(const LatticeVector& a, const LatticeVector& b) const;
  Rational norm(const LatticeVector& v) const { return pair(v, v); }
  std::vector<int> psi(const LatticeVector& v) const;
  // 2 - sum of contributions of psi(v); equals norm(v) for basis vectors.
  Rational height_from_psi(const LatticeVector& v) const;
  std::string name(const LatticeVector& v) const;

 private:
  CaseLattice(std::string id, RatMatrix gram, std::vector<CaseFiber> fibers, std::vector<std::string> names);
  std::string id_;
  RatMatrix gram_;
  std::vector<CaseFiber> fibers_;
  std::vector<std::string> names_;
};

// Type 1..6 from the singular points a conic passes through.
int type_of(int nodes, bool cusp);

std::optional<Rational> target_height(const CaseLattice& c, int type);
bool matches_type(const CaseLattice& c, const LatticeVector& v, int type);
std::vector<LatticeVector> enumerate_norm_vectors(const CaseLattice& c, const Rational& h);
std::array<int, 6> classify_and_count(const CaseLattice& c);
// One representative per {v, -v}: first nonzero coordinate positive.
std::vector<LatticeVector> vectors_for_type(const CaseLattice& c, int type);
LatticeVector canonical_sign(LatticeVector v);

// Nonzero elementary divisors of an integer matrix.
std::vector<BigInt> smith_divisors(const std::vector<LatticeVector>& rows);
int integer_rank(const std::vector<LatticeVector>& rows);
bool check_basis_extension(const LatticeVector& s1, const LatticeVector& s2);

// Sum of v[k] * basis[k] under the group law.
Section combination(const WeierstrassModel& m, const std::vector<Section>& basis, const LatticeVector& v);
// Integer coordinates of p on `basis` read off from heights, then confirmed
// by rebuilding p with the group law; empty when p is not in the span.
std::optional<LatticeVector> lattice_coordinates(const HeightContext& ctx, const std::vector<Section>& basis,
                                                 const Section& p);

}  // namespace wcc

#pragma once

#include <string>
#include <vector>

#include "wcc/fixtures.hpp"
#include "wcc/mwlattice.hpp"

namespace wcc {

// A Case I lattice vector pushed through the worked-example surface.
struct RealizedConic {
  int type = 0;
  LatticeVector coords;
  std::string name;
  Section section;
  TriForm curve;
  bool weak_contact = false;
  int bezout_total = 0;
  int geometric_type = 0;  // from the singular points the curve passes through
  bool psi_agrees = false;  // surface component indices equal the lattice ones
  bool ok() const { return weak_contact && bezout_total == 8 && geometric_type == type && psi_agrees; }
};

// Every Case I vector of every admissible type, one per {v, -v}.
std::vector<RealizedConic> realize_case_one(const WorkedExample& ex);

// Basis (P1, P2, P3) of the worked-example lattice.
std::vector<Section> case_one_basis(const WorkedExample& ex);

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ZariskiReport {
  std::string id, first, second;  // arrangement names
  std::string s1, s2;             // section names
  // "line": the arrangements differ in the line, f(s1) against f(s2), sharing
  // the conic f([2]s1). "conic": they share f(s1) and differ in the conic.
  std::string shape;
  LatticeVector c1, c2;
  std::vector<HypothesisCheck> hypotheses;
  bool fingerprints_equal = false;
  Fingerprint fingerprint_first, fingerprint_second;
  std::string conclusion;

  bool hypotheses_pass() const;
  std::vector<std::string> lines() const;
};

std::vector<std::string> zariski_pair_ids();
// Throws PreconditionError for an unknown id.
ZariskiReport zariski_pair_report(const WorkedExample& ex, const std::string& id);

}  // namespace wcc

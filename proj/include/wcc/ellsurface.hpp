#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcc/planecurve.hpp"
#include "wcc/poly.hpp"

namespace wcc {

// y^2 = x^3 + a2 x^2 + a4 x + a6 over K(t).
class WeierstrassModel {
 public:
  WeierstrassModel() = default;
  WeierstrassModel(Poly a2, Poly a4, Poly a6);

  // Reads the model from a plane quartic whose (t, x) chart is a cubic in x
  // with constant leading coefficient.
  static WeierstrassModel from_quartic(const TriForm& q);

  const Poly& a2() const { return a2_; }
  const Poly& a4() const { return a4_; }
  const Poly& a6() const { return a6_; }

  Poly discriminant() const;
  Poly c4() const;
  RatFunc cubic(const RatFunc& x) const;
  // Model in the chart s = 1/t.
  WeierstrassModel at_infinity() const;
  // Model with t replaced by t + v.
  WeierstrassModel translated(const FieldElem& v) const;
  bool operator==(const WeierstrassModel& b) const { return a2_ == b.a2_ && a4_ == b.a4_ && a6_ == b.a6_; }
  std::string to_string() const;

 private:
  Poly a2_, a4_, a6_;
};

class Section {
 public:
  Section() = default;  // zero section
  Section(RatFunc x, RatFunc y) : zero_(false), x_(std::move(x)), y_(std::move(y)) {}
  static Section zero() { return Section(); }

  bool is_zero() const { return zero_; }
  const RatFunc& x() const { return x_; }
  const RatFunc& y() const { return y_; }
  bool operator==(const Section& b) const;
  // Polynomial x of degree <= 2 and y of degree <= 3.
  bool in_stratum() const;
  std::string to_string() const;

 private:
  bool zero_ = true;
  RatFunc x_, y_;
};

bool on_curve(const WeierstrassModel& m, const Section& p);
Section neg(const Section& p);
Section add(const WeierstrassModel& m, const Section& p, const Section& q);
Section sub(const WeierstrassModel& m, const Section& p, const Section& q);
Section mul(const WeierstrassModel& m, long k, const Section& p);

// Section in the chart s = 1/t: (s^2 x(1/s), s^3 y(1/s)).
Section section_at_infinity(const Section& p);
// Section with t replaced by t + v.
Section section_translated(const Section& p, const FieldElem& v);

PlaneCurve section_to_plane_curve(const Section& p);
std::pair<Section, Section> plane_curve_to_sections(const WeierstrassModel& m, const TriForm& c);

enum class Kodaira { In, II, III, IV };

struct FiberInfo {
  bool at_infinity = false;
  FieldElem location;
  Kodaira type = Kodaira::In;
  int n = 0;  // for I_n
  bool flipped = false;  // orientation i <-> m - i

  int components() const;
  int euler() const;
  std::string type_name() const;
  std::string location_name() const;
};

struct FiberReport {
  std::vector<FiberInfo> fibers;
  int residual_euler = 0;
};

FiberReport classify_fibers(const WeierstrassModel& m);

// Index of the fiber component met by p, in Z/m_v.
int component_index(const WeierstrassModel& m, const Section& p, const FiberInfo& f);
// Chooses each orientation so that p meets index 1 where it meets a component
// of index +-1.
void orient_fibers(const WeierstrassModel& m, const Section& p, std::vector<FiberInfo>& fibers);

// Power-series helpers used by the valuation walk.
Poly series_inverse(const Poly& p, int n);
Poly series_of(const RatFunc& f, int n);

}  // namespace wcc

#pragma once

#include <string>
#include <vector>

#include "wcc/forms.hpp"

namespace wcc {

enum class SingularityKind { Smooth, Node, Cusp, Other };
enum class TangentCase { S, B, SC, SN };

std::string kind_name(SingularityKind k);
std::string tangent_case_name(TangentCase c);

// Projective point, stored with its last nonzero coordinate equal to 1.
class PlanePoint {
 public:
  PlanePoint() = default;
  explicit PlanePoint(const Vec3& coords);
  const Vec3& coords() const { return c_; }
  const FieldElem& operator[](int k) const { return c_[k]; }
  bool operator==(const PlanePoint& b) const { return c_ == b.c_; }
  auto operator<=>(const PlanePoint& b) const { return c_ <=> b.c_; }
  std::string to_string() const;

 private:
  Vec3 c_;
};

struct SingularPoint {
  PlanePoint point;
  SingularityKind kind;
};

// Reduced projective curve.
class PlaneCurve {
 public:
  PlaneCurve() = default;
  explicit PlaneCurve(TriForm form, std::string name = "");
  const TriForm& form() const { return form_; }
  int degree() const { return form_.degree(); }
  const std::string& name() const { return name_; }
  bool contains(const PlanePoint& p) const { return form_.eval(p.coords()).is_zero(); }

 private:
  TriForm form_;
  std::string name_;
};

bool is_squarefree_form(const TriForm& f);

// Invertible M with M*(0,1,0) = p.
Matrix3 matrix_with_center(const Vec3& p);

// Local affine equation of f with p moved to the origin.
BiPoly local_equation(const TriForm& f, const PlanePoint& p);
SingularityKind local_kind(const BiPoly& f);
SingularityKind point_kind(const TriForm& f, const PlanePoint& p);

std::vector<SingularPoint> singular_points(const PlaneCurve& c);

// Fulton's algorithm at the origin; throws PreconditionError on a common
// component through the origin.
int fulton_multiplicity(const BiPoly& f, const BiPoly& g);
int intersection_multiplicity(const TriForm& f, const TriForm& g, const PlanePoint& p);

TriForm tangent_line(const TriForm& f, const PlanePoint& p);

// Standard quadratic transformation with the triangle moved to the
// coordinate triangle; the result is kept in the triangle coordinates.
TriForm cremona_transform(const TriForm& f, const std::array<TriForm, 3>& triangle);

TangentCase classify_tangent_case(const PlaneCurve& q, const PlanePoint& z);

// One class of intersection points: the roots of `factor` in the working
// chart, each carrying intersection multiplicity `multiplicity`.
struct IntersectionClass {
  Poly factor;
  int multiplicity = 0;
  std::vector<PlanePoint> points;  // K-rational members, original coordinates
  bool via_fulton = false;
};

struct IntersectionData {
  Matrix3 chart;  // old = chart * new
  Poly resultant;
  BiPoly x_solution;  // s11*x + s10, linear in x
  bool certified = false;
  std::vector<IntersectionClass> classes;
  int bezout_total = 0;
};

IntersectionData intersect_curves(const TriForm& f, const TriForm& g);

struct ContactCertificate {
  bool weak_contact = false;
  IntersectionData data;
  std::vector<std::string> lines() const;
};

ContactCertificate is_weak_contact(const PlaneCurve& q, const PlaneCurve& c);

// Types 1..6 from the singular points of q lying on c.
struct SingSubset {
  int nodes = 0;
  bool cusp = false;
};
SingSubset sing_on_curve(const std::vector<SingularPoint>& sing, const PlaneCurve& c);

struct Fingerprint {
  std::vector<std::string> lines;
  std::string text() const;
  bool operator==(const Fingerprint& b) const { return lines == b.lines; }
};

Fingerprint arrangement_fingerprint(const std::vector<PlaneCurve>& components);

}  // namespace wcc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "wcc/ellsurface.hpp"
#include "wcc/mwheight.hpp"
#include "wcc/planecurve.hpp"

namespace wcc {

// Named objects from the fixture text format. A line reads
// `<kind> <name>: <value>`; a line without a kind is a curve, so plain
// `name: polynomial` files load too.
struct FixtureData {
  std::map<std::string, TriForm> curves;
  std::map<std::string, PlanePoint> points;
  std::map<std::string, Matrix3> matrices;
  std::map<std::string, Section> sections;
  std::map<std::string, std::vector<std::string>> arrangements;

  bool operator==(const FixtureData& b) const = default;
  // Adds every entry of `b`, replacing entries with the same name.
  void merge(const FixtureData& b);
};

FixtureData parse_fixture(const std::string& text);
FixtureData read_fixture_file(const std::string& path);
Section parse_section(const std::string& text);

struct WorkedExample {
  FixtureData data;
  WeierstrassModel model;
  std::vector<SingularPoint> singular;   // of phiQ
  std::vector<std::string> identities;   // checked on load, in order

  bool operator==(const WorkedExample& b) const { return data == b.data && model == b.model; }

  PlaneCurve curve(const std::string& name) const;
  Section section(const std::string& name) const;
  PlanePoint point(const std::string& name) const;
  std::vector<PlaneCurve> arrangement(const std::string& name) const;
  // Height context with orientation fixed by P1.
  HeightContext heights() const;
};

// The bundled fixture text.
const std::string& worked_example_text();

// Parses and re-verifies every stored identity; the first failure throws an
// IntegrityError naming it.
WorkedExample load_worked_example();
WorkedExample load_worked_example_from_text(const std::string& text);

}  // namespace wcc

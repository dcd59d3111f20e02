#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wcc/fixtures.hpp"

namespace wcc {

enum class Format { Text, Structured };
Format parse_format(const std::string& s);

struct Report {
  std::string body;
  int status = 0;  // 0 ok, 3 when a regression check failed
};

// State shared by the commands: the worked example (loaded on first use) and
// any extra named curves and sections read from input files.
class Session {
 public:
  // Replaces the bundled fixture text used by the worked example.
  void set_fixture_text(std::string text);
  // Adds named curves, sections, points and arrangements.
  void add_input(const std::string& path);

  const WorkedExample& example();
  // A name from the fixture or an input file, or a polynomial literal.
  TriForm resolve_curve(const std::string& text);
  // A literal `(x, y)`, `O`, or a sum like `[2]P1 - P2 + P3`.
  Section resolve_section(const std::string& text, const WeierstrassModel& m);

  Report verify_example(Format f);
  Report fibers(const std::string& quartic, Format f);
  Report height(const std::vector<std::string>& sections, const std::string& quartic, Format f);
  Report group_op(const std::string& op, const std::vector<std::string>& args, const std::string& quartic, Format f);
  Report enumerate(const std::string& case_id, std::optional<int> type, Format f);
  Report main_theorem(Format f);
  Report weak_contact(const std::string& quartic, const std::string& conic, Format f);
  Report cremona(const std::string& curve, const std::vector<std::string>& triangle, Format f);
  Report zariski(const std::string& pair, Format f);  // "all" runs every pair
  Report fingerprint(const std::vector<std::string>& components, Format f);

 private:
  WeierstrassModel model_for(const std::string& quartic);
  std::optional<std::string> fixture_text_;
  FixtureData extra_;
  std::unique_ptr<WorkedExample> example_;
};

}  // namespace wcc

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wcc.h"

namespace {

std::vector<const char*> c_strs(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

int emit(wcc_session* s, wcc_status st, char* report) {
  if (report) {
    std::fputs(report, stdout);
    wcc_string_free(report);
  }
  if (st != WCC_OK) std::fprintf(stderr, "error: %s\n", wcc_last_error(s));
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak contact conics of a quartic with two nodes and a cusp"};
  app.require_subcommand(1);

  std::string format = "text";
  std::vector<std::string> inputs;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--input", inputs,
                 "file of named curves/sections; for verify-example it replaces the bundled fixture");

  std::string quartic = "phiQ";
  auto* verify = app.add_subcommand("verify-example", "re-run the worked-example regression");

  auto* fibers = app.add_subcommand("fibers", "singular fibers of the Weierstrass model of a quartic");
  fibers->add_option("--quartic", quartic, "curve name or polynomial");

  std::vector<std::string> sections;
  auto* height = app.add_subcommand("height", "height pairing of sections (Gram matrix for several)");
  height->add_option("sections", sections, "section names, sums like [2]P1-P2, or (x, y) literals")->required();
  height->add_option("--quartic", quartic, "curve name or polynomial");

  std::string op;
  std::vector<std::string> operands;
  auto* group = app.add_subcommand("group-op", "group law: add, sub, neg, double, mul");
  group->add_option("op", op, "operation")->required()->check(CLI::IsMember({"add", "sub", "neg", "double", "mul"}));
  group->add_option("operands", operands, "sections (and the multiplier for mul)")->required();
  group->add_option("--quartic", quartic, "curve name or polynomial");

  std::string case_id;
  int type = 0;
  auto* enumerate = app.add_subcommand("enumerate", "lattice vectors of each conic type");
  enumerate->add_option("--case", case_id, "I, II, III or IV")->required()->check(CLI::IsMember({"I", "II", "III", "IV"}));
  enumerate->add_option("--type", type, "conic type 1..6")->check(CLI::Range(1, 6));

  auto* theorem = app.add_subcommand("main-theorem", "count weak contact conics per type for all four cases");

  std::string conic;
  auto* contact = app.add_subcommand("weak-contact", "test whether a conic is a weak contact conic of a quartic");
  contact->add_option("--quartic", quartic, "curve name or polynomial");
  contact->add_option("--conic", conic, "curve name or polynomial")->required();

  std::string curve;
  std::vector<std::string> triangle;
  auto* cremona = app.add_subcommand("cremona", "standard quadratic transform of a curve");
  cremona->add_option("--curve", curve, "curve name or polynomial")->required();
  cremona->add_option("--triangle", triangle, "three lines (default: the fixture triangle)")->expected(3);

  std::string pair;
  auto* zariski = app.add_subcommand("zariski", "lattice hypotheses for a candidate Zariski pair");
  auto* pair_opt = zariski->add_option("--pair", pair, "pair id such as B11-B21");
  auto* all_opt = zariski->add_flag("--all", "every pair");
  pair_opt->excludes(all_opt);

  std::vector<std::string> components;
  auto* fingerprint = app.add_subcommand("fingerprint", "combinatorial fingerprint of an arrangement");
  fingerprint->add_option("components", components, "an arrangement name, or curves")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return WCC_ERR_USAGE;
  }
  if (zariski->parsed() && pair.empty() && !all_opt->as<bool>()) {
    std::fprintf(stderr, "error: zariski needs --pair or --all\n");
    return WCC_ERR_USAGE;
  }

  wcc_session* s = wcc_session_new();
  if (!s) return WCC_ERR_INTEGRITY;
  wcc_format f = format == "structured" ? WCC_FORMAT_STRUCTURED : WCC_FORMAT_TEXT;
  char* report = nullptr;
  wcc_status st = WCC_OK;

  for (const auto& path : inputs) {
    st = verify->parsed() ? wcc_set_fixture_file(s, path.c_str()) : wcc_add_input(s, path.c_str());
    if (st != WCC_OK) break;
  }

  if (st == WCC_OK) {
    if (verify->parsed()) {
      st = wcc_verify_example(s, f, &report);
    } else if (fibers->parsed()) {
      st = wcc_fibers(s, quartic.c_str(), f, &report);
    } else if (height->parsed()) {
      auto v = c_strs(sections);
      st = wcc_height(s, v.data(), v.size(), quartic.c_str(), f, &report);
    } else if (group->parsed()) {
      auto v = c_strs(operands);
      st = wcc_group_op(s, op.c_str(), v.data(), v.size(), quartic.c_str(), f, &report);
    } else if (enumerate->parsed()) {
      st = wcc_enumerate(s, case_id.c_str(), type, f, &report);
    } else if (theorem->parsed()) {
      st = wcc_main_theorem(s, f, &report);
    } else if (contact->parsed()) {
      st = wcc_weak_contact(s, quartic.c_str(), conic.c_str(), f, &report);
    } else if (cremona->parsed()) {
      auto v = c_strs(triangle);
      st = wcc_cremona(s, curve.c_str(), v.data(), v.size(), f, &report);
    } else if (zariski->parsed()) {
      st = wcc_zariski(s, pair.empty() ? "all" : pair.c_str(), f, &report);
    } else if (fingerprint->parsed()) {
      auto v = c_strs(components);
      st = wcc_fingerprint(s, v.data(), v.size(), f, &report);
    }
  }
  int code = emit(s, st, report);
  wcc_session_free(s);
  return code;
}

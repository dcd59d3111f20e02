#include <string>

#include "doctest.h"
#include "wcc.h"

namespace {

struct Session {
  wcc_session* s = wcc_session_new();
  ~Session() { wcc_session_free(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  wcc_string_free(p);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("main theorem table through the C interface") {
    Session ss;
    char* out = nullptr;
    REQUIRE(wcc_main_theorem(ss.s, WCC_FORMAT_TEXT, &out) == WCC_OK);
    std::string text = take(out);
    CHECK(text.find("3") != std::string::npos);
    CHECK(text.find("IV") != std::string::npos);
  }

  TEST_CASE("height of a section") {
    Session ss;
    char* out = nullptr;
    const char* args[] = {"P1"};
    REQUIRE(wcc_height(ss.s, args, 1, nullptr, WCC_FORMAT_TEXT, &out) == WCC_OK);
    CHECK(take(out).find("1/3") != std::string::npos);
  }

  TEST_CASE("structured output is JSON") {
    Session ss;
    char* out = nullptr;
    REQUIRE(wcc_enumerate(ss.s, "II", 5, WCC_FORMAT_STRUCTURED, &out) == WCC_OK);
    std::string text = take(out);
    CHECK(text.front() == '{');
  }

  TEST_CASE("error codes and messages") {
    Session ss;
    char* out = nullptr;
    CHECK(wcc_zariski(ss.s, "nope", WCC_FORMAT_TEXT, &out) == WCC_ERR_PRECONDITION);
    CHECK(out == nullptr);
    CHECK(std::string(wcc_last_error(ss.s)).find("nope") != std::string::npos);
    CHECK(wcc_weak_contact(ss.s, nullptr, "x - (t", WCC_FORMAT_TEXT, &out) == WCC_ERR_USAGE);
    CHECK(wcc_enumerate(ss.s, "V", 0, WCC_FORMAT_TEXT, &out) == WCC_ERR_PRECONDITION);
    CHECK(wcc_set_fixture_file(ss.s, "/nonexistent/file") != WCC_OK);
    CHECK(wcc_main_theorem(nullptr, WCC_FORMAT_TEXT, &out) == WCC_ERR_USAGE);
  }

  TEST_CASE("zariski report for one pair") {
    Session ss;
    char* out = nullptr;
    REQUIRE(wcc_zariski(ss.s, "B11-B21", WCC_FORMAT_TEXT, &out) == WCC_OK);
    std::string text = take(out);
    CHECK(text.find("fail:") == std::string::npos);
    CHECK(text.find("fingerprints equal") != std::string::npos);
  }
}

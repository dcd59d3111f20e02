#include "wcc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "wcc/errors.hpp"
#include "wcc/reports.hpp"

struct wcc_session {
  wcc::Session session;
  std::string error;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string str(const char* p) { return p ? p : ""; }
std::string quartic_or_default(const char* p) { return p && *p ? p : "phiQ"; }

std::vector<std::string> strs(const char* const* v, size_t n) {
  std::vector<std::string> out;
  for (size_t k = 0; k < n; ++k) out.push_back(str(v[k]));
  return out;
}

wcc::Format fmt(wcc_format f) { return f == WCC_FORMAT_STRUCTURED ? wcc::Format::Structured : wcc::Format::Text; }

template <class F>
wcc_status guarded(wcc_session* s, char** out, F&& body) {
  if (out) *out = nullptr;
  if (!s) return WCC_ERR_USAGE;
  s->error.clear();
  try {
    wcc::Report r = body();
    if (out) *out = dup(r.body);
    if (r.status) s->error = "regression checks failed";
    return static_cast<wcc_status>(r.status);
  } catch (const wcc::ParseError& e) {
    s->error = e.what();
    return WCC_ERR_USAGE;
  } catch (const wcc::PreconditionError& e) {
    s->error = e.what();
    return WCC_ERR_PRECONDITION;
  } catch (const wcc::IntegrityError& e) {
    s->error = e.what();
    return WCC_ERR_INTEGRITY;
  } catch (const std::exception& e) {
    s->error = std::string("internal error: ") + e.what();
    return WCC_ERR_INTEGRITY;
  }
}

}  // namespace

extern "C" {

wcc_session* wcc_session_new(void) {
  try {
    return new wcc_session();
  } catch (...) {
    return nullptr;
  }
}

void wcc_session_free(wcc_session* s) { delete s; }

const char* wcc_last_error(const wcc_session* s) { return s ? s->error.c_str() : "no session"; }

void wcc_string_free(char* p) { std::free(p); }

wcc_status wcc_set_fixture_file(wcc_session* s, const char* path) {
  return guarded(s, nullptr, [&] {
    std::ifstream f(str(path));
    if (!f) throw wcc::PreconditionError("cannot read " + str(path));
    std::stringstream ss;
    ss << f.rdbuf();
    s->session.set_fixture_text(ss.str());
    return wcc::Report{};
  });
}

wcc_status wcc_add_input(wcc_session* s, const char* path) {
  return guarded(s, nullptr, [&] {
    s->session.add_input(str(path));
    return wcc::Report{};
  });
}

wcc_status wcc_verify_example(wcc_session* s, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.verify_example(fmt(f)); });
}

wcc_status wcc_fibers(wcc_session* s, const char* quartic, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.fibers(quartic_or_default(quartic), fmt(f)); });
}

wcc_status wcc_height(wcc_session* s, const char* const* sections, size_t n, const char* quartic, wcc_format f,
                      char** out) {
  return guarded(s, out, [&] { return s->session.height(strs(sections, n), quartic_or_default(quartic), fmt(f)); });
}

wcc_status wcc_group_op(wcc_session* s, const char* op, const char* const* args, size_t n, const char* quartic,
                        wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.group_op(str(op), strs(args, n), quartic_or_default(quartic), fmt(f)); });
}

wcc_status wcc_enumerate(wcc_session* s, const char* case_id, int type, wcc_format f, char** out) {
  return guarded(s, out, [&] {
    std::optional<int> t;
    if (type != 0) t = type;
    return s->session.enumerate(str(case_id), t, fmt(f));
  });
}

wcc_status wcc_main_theorem(wcc_session* s, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.main_theorem(fmt(f)); });
}

wcc_status wcc_weak_contact(wcc_session* s, const char* quartic, const char* conic, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.weak_contact(quartic_or_default(quartic), str(conic), fmt(f)); });
}

wcc_status wcc_cremona(wcc_session* s, const char* curve, const char* const* triangle, size_t n, wcc_format f,
                       char** out) {
  return guarded(s, out, [&] { return s->session.cremona(str(curve), strs(triangle, n), fmt(f)); });
}

wcc_status wcc_zariski(wcc_session* s, const char* pair, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.zariski(str(pair), fmt(f)); });
}

wcc_status wcc_fingerprint(wcc_session* s, const char* const* components, size_t n, wcc_format f, char** out) {
  return guarded(s, out, [&] { return s->session.fingerprint(strs(components, n), fmt(f)); });
}

}  // extern "C"

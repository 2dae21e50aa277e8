// Minimal assertion helpers shared by the test mains.
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testkit {

inline int checks = 0;

inline void fail(const char* file, int line, const std::string& msg) {
  std::fprintf(stderr, "[FAIL] %s:%d %s\n", file, line, msg.c_str());
  std::exit(1);
}

#define REQUIRE(cond)                                              \
  do {                                                             \
    ++testkit::checks;                                             \
    if (!(cond)) testkit::fail(__FILE__, __LINE__, "rejected: " #cond); \
  } while (0)

#define REQUIRE_MSG(cond, msg)                            \
  do {                                                    \
    ++testkit::checks;                                    \
    if (!(cond)) testkit::fail(__FILE__, __LINE__, msg);  \
  } while (0)

#define REQUIRE_CLOSE(actual, expected, tol)                                  \
  do {                                                                        \
    ++testkit::checks;                                                        \
    const double a_ = static_cast<double>(actual);                            \
    const double e_ = static_cast<double>(expected);                          \
    if (!(std::abs(a_ - e_) <= (tol))) {                                      \
      testkit::fail(__FILE__, __LINE__,                                       \
                    std::string(#actual) + " = " + std::to_string(a_) +       \
                        " vs " + std::to_string(e_) + " (|diff| = " +         \
                        std::to_string(std::abs(a_ - e_)) + " > " +           \
                        std::to_string(static_cast<double>(tol)) + ")");      \
    }                                                                         \
  } while (0)

#define REQUIRE_REL(actual, expected, tol)                                    \
  do {                                                                        \
    ++testkit::checks;                                                        \
    const double a_ = static_cast<double>(actual);                            \
    const double e_ = static_cast<double>(expected);                          \
    const double scale_ = std::max(std::abs(e_), 1e-300);                     \
    if (!(std::abs(a_ - e_) / scale_ <= (tol))) {                             \
      testkit::fail(__FILE__, __LINE__,                                       \
                    std::string(#actual) + " = " + std::to_string(a_) +       \
                        " vs " + std::to_string(e_) + " (rel = " +            \
                        std::to_string(std::abs(a_ - e_) / scale_) + " > " +  \
                        std::to_string(static_cast<double>(tol)) + ")");      \
    }                                                                         \
  } while (0)

#define REQUIRE_THROWS(expr, exception_type)                                   \
  do {                                                                         \
    ++testkit::checks;                                                         \
    bool caught_ = false;                                                      \
    try {                                                                      \
      (void)(expr);                                                            \
    } catch (const exception_type&) {                                          \
      caught_ = true;                                                          \
    } catch (...) {                                                            \
      testkit::fail(__FILE__, __LINE__, #expr " threw the wrong type");        \
    }                                                                          \
    if (!caught_)                                                              \
      testkit::fail(__FILE__, __LINE__, #expr " did not throw " #exception_type); \
  } while (0)

inline void pass(const char* name) { std::printf("[PASS] %s\n", name); }

inline void pass(const char* name, double measured) {
  std::printf("[PASS] %s (measured %.3e)\n", name, measured);
}

inline int done() {
  std::printf("all tests passed (%d checks)\n", checks);
  return 0;
}

}  // namespace testkit

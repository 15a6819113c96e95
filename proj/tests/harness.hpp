#pragma once

// Minimal check harness for the test binaries: count checks, print every
// failure with its location, and turn the failure count into the exit code.

#include <gmpxx.h>

#include <cstdio>
#include <string>
#include <type_traits>

namespace harness {

inline long checks = 0;
inline long failures = 0;

inline std::string show(const mpz_class& v) { return v.get_str(); }
inline std::string show(const mpq_class& v) { return v.get_str(); }
inline std::string show(const std::string& v) { return v; }
inline std::string show(const char* v) { return v; }
inline std::string show(bool v) { return v ? "true" : "false"; }
template <class T>
std::string show(const T& v) {
  if constexpr (std::is_convertible_v<T, mpz_class>)
    return mpz_class(v).get_str();
  else if constexpr (std::is_convertible_v<T, mpq_class>)
    return mpq_class(v).get_str();
  else if constexpr (requires { v.str(); })
    return v.str();
  else
    return std::to_string(v);
}

template <class A, class B>
void check_eq(const A& a, const B& b, const char* sa, const char* sb, const char* file,
              int line) {
  ++checks;
  if (!(a == b)) {
    ++failures;
    std::printf("FAIL %s:%d: %s == %s\n  lhs = %s\n  rhs = %s\n", file, line, sa, sb,
                show(a).c_str(), show(b).c_str());
  }
}

inline void check(bool ok, const char* expr, const char* file, int line) {
  ++checks;
  if (!ok) {
    ++failures;
    std::printf("FAIL %s:%d: %s\n", file, line, expr);
  }
}

// 0 when everything passed, 1 otherwise -- use as the return value of main()
inline int summary(const char* name) {
  std::printf("%s: %ld checks, %ld failures\n", name, checks, failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace harness

#define CHECK(cond) harness::check(static_cast<bool>(cond), #cond, __FILE__, __LINE__)
#define CHECK_EQ(a, b) harness::check_eq((a), (b), #a, #b, __FILE__, __LINE__)

#define CHECK_THROWS(kind, expr)                                                    \
  do {                                                                              \
    ++harness::checks;                                                              \
    bool caught_ = false;                                                           \
    try {                                                                           \
      (void)(expr);                                                                 \
    } catch (const kind&) {                                                         \
      caught_ = true;                                                               \
    } catch (...) {                                                                 \
    }                                                                               \
    if (!caught_) {                                                                 \
      ++harness::failures;                                                          \
      std::printf("FAIL %s:%d: expected %s from %s\n", __FILE__, __LINE__, #kind,   \
                  #expr);                                                           \
    }                                                                               \
  } while (0)

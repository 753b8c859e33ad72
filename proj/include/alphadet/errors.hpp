#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace alphadet {

// Input or size-guard violation (CLI exit code 2).
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A runtime check of a mathematically guaranteed fact failed (CLI exit code 3).
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

// Size guards default to `fallback` but can be raised/lowered via the
// ALPHADET_GUARD_MAX environment variable.
inline long long guard_limit(long long fallback) {
  if (const char* env = std::getenv("ALPHADET_GUARD_MAX")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return fallback;
}

}  // namespace alphadet

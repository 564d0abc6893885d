#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace spinlocal {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SessionConfig {
  unsigned p = 3;
  long D = 5;
  int rmax = 4;
  int amax = 2;     // enumeration bound for (a, b, c)
  int precision = 20;
  uint64_t seed = 20240613;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws ConfigError unless p is an odd prime, p does not divide 2D, and the bounds are sane.
  void validate() const;
  bool split() const;
  /// SPINV_PRECISION and SPINV_THREADS override precision and threads.
  void apply_env();
  unsigned worker_count() const;
  nlohmann::json to_json() const;
};

}  // namespace spinlocal

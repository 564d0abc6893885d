#include "spinlocal/config.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <thread>

#include "spinlocal/padic.hpp"

namespace spinlocal {

namespace {

long env_long(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (s == nullptr || *s == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0') throw ConfigError(std::string(name) + " is not an integer: " + s);
  return v;
}

}  // namespace

void SessionConfig::validate() const {
  if (p == 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 25) == 0)
    throw ConfigError("p = " + std::to_string(p) + " is not an odd prime");
  if (D == 0 || D % static_cast<long>(p) == 0)
    throw ConfigError("p = " + std::to_string(p) + " divides 2D = " + std::to_string(2 * D));
  if (rmax < 0) throw ConfigError("rmax must be nonnegative");
  if (amax < 0) throw ConfigError("amax must be nonnegative");
  if (precision < 4) throw ConfigError("precision must be at least 4");
}

bool SessionConfig::split() const { return legendre(mpz_class(D), p) == 1; }

void SessionConfig::apply_env() {
  precision = static_cast<int>(env_long("SPINV_PRECISION", precision));
  threads = static_cast<unsigned>(env_long("SPINV_THREADS", threads));
}

unsigned SessionConfig::worker_count() const {
  if (threads > 0) return threads;
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

nlohmann::json SessionConfig::to_json() const {
  return {{"p", p}, {"D", D}, {"case", split() ? "split" : "inert"}, {"Rmax", rmax},
          {"amax", amax}, {"precision", precision}, {"seed", seed}};
}

}  // namespace spinlocal

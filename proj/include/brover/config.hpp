#ifndef BROVER_CONFIG_HPP
#define BROVER_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <string>

namespace brover {

// Central knobs for everything that takes a budget. Flags and the
// BROVER_* environment variables override the defaults.
struct Config {
  int depth = 32;              // section-expansion depth for semidecisions
  int samples = 200;           // randomized checks per axiom/property
  std::uint64_t seed = 1;      // RNG seed, always echoed in reports
  int unsection_nodes = 50000; // search budget for kappa-preimage lookups
};

inline int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::atoi(v);
}

inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  return std::strtoull(v, nullptr, 10);
}

inline Config default_config() {
  Config c;
  c.depth = env_int("BROVER_DEPTH", c.depth);
  c.samples = env_int("BROVER_SAMPLES", c.samples);
  c.seed = env_u64("BROVER_SEED", c.seed);
  c.unsection_nodes = env_int("BROVER_UNSECTION_NODES", c.unsection_nodes);
  return c;
}

// Three-valued verdict used by every equality-style query. `equal` and
// `unequal` are final answers; `unknown` carries the exhausted budget.
enum class Verdict { equal, unequal, unknown };

struct EqVerdict {
  Verdict v = Verdict::unknown;
  int budget = 0; // meaningful only when v == unknown

  bool is_equal() const { return v == Verdict::equal; }
  bool is_unequal() const { return v == Verdict::unequal; }
  bool is_unknown() const { return v == Verdict::unknown; }

  static EqVerdict equal() { return {Verdict::equal, 0}; }
  static EqVerdict unequal() { return {Verdict::unequal, 0}; }
  static EqVerdict unknown(int budget) { return {Verdict::unknown, budget}; }
};

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::unequal: return "unequal";
    default: return "unknown";
  }
}

} // namespace brover

#endif

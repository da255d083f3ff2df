#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace eccspec {

/// Every tolerance and enumeration default in one place. CLI flags and
/// ECCSPEC_* environment variables override these.
struct Settings {
  double equality_tol = 1e-9;   // "rho = bound" decisions
  double tightness_tol = 1e-6;  // quotient-bound tightness witnesses
  double energy_tol = 1e-8;     // closed-form energy comparisons
  double bucket_tol = 1e-7;     // equienergetic buckets
  int jobs = 0;                 // 0 = hardware concurrency
  int exhaustive_max = 7;       // default largest n for exhaustive universes
  bool allow_large = false;     // permit n = 8 graph enumeration
  std::uint64_t seed = 20201208;
  std::filesystem::path cache_dir;

  int effective_jobs() const;
  void validate() const;
};

inline constexpr const char* kEnvPrefix = "ECCSPEC_";

/// Applies ECCSPEC_EQUALITY_TOL, ECCSPEC_TIGHTNESS_TOL, ECCSPEC_ENERGY_TOL,
/// ECCSPEC_BUCKET_TOL, ECCSPEC_JOBS, ECCSPEC_EXHAUSTIVE_MAX,
/// ECCSPEC_ALLOW_LARGE, ECCSPEC_SEED and ECCSPEC_CACHE_DIR on top of base.
Settings settings_from_environment(Settings base = {});

}  // namespace eccspec

#include "eccspec/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "eccspec/errors.hpp"

namespace eccspec {

int Settings::effective_jobs() const {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void Settings::validate() const {
  for (double tol : {equality_tol, tightness_tol, energy_tol, bucket_tol}) {
    if (!(tol > 0.0)) throw ContractError("tolerances must be positive");
  }
  if (jobs < 0) throw ContractError("jobs must be >= 0");
  if (exhaustive_max < 1) throw ContractError("exhaustive_max must be >= 1");
}

namespace {

const char* env(const char* name) {
  return std::getenv((std::string(kEnvPrefix) + name).c_str());
}

template <typename T, typename Convert>
void override_from(const char* name, T& field, Convert convert) {
  if (const char* v = env(name)) {
    try {
      field = convert(v);
    } catch (const std::exception&) {
      throw ContractError(std::string(kEnvPrefix) + name + ": cannot parse '" + v + "'");
    }
  }
}

}  // namespace

Settings settings_from_environment(Settings base) {
  auto to_double = [](const char* s) { return std::stod(s); };
  auto to_int = [](const char* s) { return std::stoi(s); };
  override_from("EQUALITY_TOL", base.equality_tol, to_double);
  override_from("TIGHTNESS_TOL", base.tightness_tol, to_double);
  override_from("ENERGY_TOL", base.energy_tol, to_double);
  override_from("BUCKET_TOL", base.bucket_tol, to_double);
  override_from("JOBS", base.jobs, to_int);
  override_from("EXHAUSTIVE_MAX", base.exhaustive_max, to_int);
  override_from("ALLOW_LARGE", base.allow_large, [](const char* s) { return std::string(s) == "1"; });
  override_from("SEED", base.seed, [](const char* s) { return std::stoull(s); });
  override_from("CACHE_DIR", base.cache_dir, [](const char* s) { return std::filesystem::path(s); });
  base.validate();
  return base;
}

}  // namespace eccspec

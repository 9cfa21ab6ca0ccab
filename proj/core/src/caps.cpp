#include "baker/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "baker/errors.hpp"

namespace baker {
namespace {

template <typename T>
void read_env(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value == 0) {
    raise(Errc::InvalidArgument, std::string("bad value for ") + name + ": " + raw);
  }
  target = static_cast<T>(value);
}

std::mutex& caps_mutex() {
  static std::mutex m;
  return m;
}

Caps& caps_storage() {
  static Caps caps = Caps::from_env();
  return caps;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  read_env("BAKER_CAP_CANTOR", caps.cantor_points);
  read_env("BAKER_CAP_NORM", caps.norm_dim);
  read_env("BAKER_CAP_SVD", caps.svd_dim);
  read_env("BAKER_CAP_DENSE", caps.dense_n);
  read_env("BAKER_CAP_EIG", caps.eig_dim);
  read_env("BAKER_CAP_BRUTE", caps.brute_energy_ops);
  return caps;
}

const Caps& default_caps() {
  std::lock_guard lock(caps_mutex());
  return caps_storage();
}

void set_default_caps(const Caps& caps) {
  std::lock_guard lock(caps_mutex());
  caps_storage() = caps;
}

}  // namespace baker

#include "cellgeom/rng.hpp"

#include <cmath>

namespace cellgeom {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& x,
                       const std::array<std::uint32_t, 2>& k) {
  std::uint64_t p0 = std::uint64_t(kMul0) * x[0];
  std::uint64_t p1 = std::uint64_t(kMul1) * x[2];
  std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::block(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> x = counter;
  std::array<std::uint32_t, 2> k = key;
  for (int r = 0; r < 10; ++r) {
    round_once(x, k);
    if (r < 9) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
  }
  return x;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
    : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
      counter_{0, 0, std::uint32_t(stream), std::uint32_t(stream >> 32)} {}

void TrialRng::refill() {
  auto out = Philox4x32::block(counter_, key_);
  buffer_[0] = (std::uint64_t(out[1]) << 32) | out[0];
  buffer_[1] = (std::uint64_t(out[3]) << 32) | out[2];
  available_ = 2;
  if (++counter_[0] == 0) ++counter_[1];  // block index, 64-bit carry
}

std::uint64_t TrialRng::next_u64() {
  if (available_ == 0) refill();
  return buffer_[--available_];
}

double TrialRng::uniform() {
  return double(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::exponential(double rate) {
  return -std::log1p(-uniform()) / rate;
}

bool TrialRng::bernoulli(double p) { return uniform() < p; }

std::int64_t TrialRng::poisson(double mean) {
  if (mean < 10.0) {
    // Knuth: count uniforms until the running product drops below e^-mean.
    double limit = std::exp(-mean);
    std::int64_t n = 0;
    double prod = uniform();
    while (prod > limit) {
      ++n;
      prod *= uniform();
    }
    return n;
  }

  // Hormann's transformed rejection (PTRS).
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  while (true) {
    double u = uniform() - 0.5;
    double v = uniform();
    double us = 0.5 - std::abs(u);
    double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return std::int64_t(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    double rhs = -mean + k * log_mean - std::lgamma(k + 1.0);
    if (lhs <= rhs) return std::int64_t(k);
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined word
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace cellgeom

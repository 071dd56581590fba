#include "evosieve/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evosieve {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

std::uint64_t Rng::next() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
  return next_unit() < p;
}

double Rng::normal(double mean, double stddev) {
  double u1 = next_unit();
  double u2 = next_unit();
  // avoid log(0)
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  double z = std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

mpz_class Rng::uniform_mpz(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("uniform_mpz: bound must be > 0");
  // Sample uniformly from [0, 2m] (m = bound) and shift to [-m, m].
  mpz_class range = 2 * bound;  // inclusive upper end
  std::size_t bits = mpz_sizeinbase(range.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  while (true) {
    mpz_class x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), 64);
      mpz_class word(static_cast<unsigned long>(next()));
      x += word;
    }
    // keep only the low `bits` bits
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x <= range) return x - bound;
  }
}

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be > 0");
  if (n == 1) return 0;
  // smallest power-of-two mask covering n-1
  std::uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  while (true) {
    std::uint64_t x = next() & mask;
    if (x < n) return x;
  }
}

Rng Rng::substream(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t derived = seed_ ^ mix64(a ^ kGolden) ^ mix64(b ^ (2 * kGolden));
  return Rng(mix64(derived));
}

}  // namespace evosieve

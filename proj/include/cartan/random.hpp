#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

constexpr std::uint64_t kDefaultSeed = 20240917;

// CARTANLAB_SEED if set to an unsigned integer, else kDefaultSeed.
std::uint64_t seed_from_env();

// Reproducible source of small rationals: numerator in -9..9, denominator
// in 1..9.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  Scalar rational();
  Scalar nonzero_rational();
  std::vector<Scalar> rationals(int n);
  // Never the zero vector.
  std::vector<Scalar> covector(int n);
  int uniform(int lo, int hi);  // inclusive
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cartan

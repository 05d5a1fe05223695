#include "cartan/random.hpp"

#include <cstdlib>
#include <string>

namespace cartan {

std::uint64_t seed_from_env() {
  const char* s = std::getenv("CARTANLAB_SEED");
  if (!s || !*s) return kDefaultSeed;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used, 10);
    if (used != std::string(s).size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("CARTANLAB_SEED is not an unsigned integer: '") + s + "'");
  }
}

Scalar Rng::rational() {
  long num = static_cast<long>(eng_() % 19) - 9;
  long den = static_cast<long>(eng_() % 9) + 1;
  return Scalar::rational(num, den);
}

Scalar Rng::nonzero_rational() {
  Scalar s;
  while (s.is_zero()) s = rational();
  return s;
}

std::vector<Scalar> Rng::rationals(int n) {
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.push_back(rational());
  return v;
}

std::vector<Scalar> Rng::covector(int n) {
  while (true) {
    auto v = rationals(n);
    for (const auto& s : v)
      if (!s.is_zero()) return v;
  }
}

int Rng::uniform(int lo, int hi) {
  return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace cartan

#pragma once

#include <random>
#include <vector>

#include "abelatt/group_ring.hpp"

namespace abelatt::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline GroupRingElement random_integral(const AbelianGroup& A, int span = 3) {
  std::uniform_int_distribution<int> dist(-span, span);
  std::vector<Rat> coeffs(A.order());
  for (auto& c : coeffs) c = dist(rng());
  return GroupRingElement(A, std::move(coeffs));
}

inline GroupRingElement random_rational(const AbelianGroup& A) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rat> coeffs(A.order());
  for (auto& c : coeffs) {
    c = Rat(num(rng()), den(rng()));
    c.canonicalize();
  }
  return GroupRingElement(A, std::move(coeffs));
}

inline std::size_t random_index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(rng());
}

/// A random non-identity element index.
inline std::size_t random_nonidentity(const AbelianGroup& A) {
  std::uniform_int_distribution<std::size_t> dist(1, A.order() - 1);
  return dist(rng());
}

}  // namespace abelatt::testing

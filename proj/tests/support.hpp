#pragma once

#include "wfh/partitions.hpp"

#include <random>

namespace wfh::test {

inline Multipartition mp(const char* s) { return parse_multipartition(s); }

// Fixed seeds keep property tests reproducible.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Partition random_partition(int n) {
  std::vector<int> parts;
  while (n > 0) {
    int k = uniform(1, n);
    parts.push_back(k);
    n -= k;
  }
  return Partition::from_unsorted(parts);
}

}  // namespace wfh::test

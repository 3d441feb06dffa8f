// Brute-force oracles used to pin expected values independently of the
// library code under test. Everything here works on plain integers.
#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

// Renumbers a tuple by first occurrence: (3,3,7) -> (0,0,1).
inline std::vector<int> first_occurrence_canon(const std::vector<int>& tuple) {
  std::vector<int> seen;
  std::vector<int> out;
  for (int v : tuple) {
    int idx = -1;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == v) idx = static_cast<int>(i);
    }
    if (idx < 0) {
      idx = static_cast<int>(seen.size());
      seen.push_back(v);
    }
    out.push_back(idx);
  }
  return out;
}

// Number of equality patterns of length-n tuples, counted by enumerating
// every tuple over an n-value universe and canonicalizing. Equals the
// number of set partitions of an n-set.
inline std::uint64_t brute_force_pattern_count(std::size_t n) {
  std::set<std::vector<int>> canon;
  std::vector<int> tuple(n, 0);
  for (;;) {
    canon.insert(first_occurrence_canon(tuple));
    std::size_t i = 0;
    while (i < n && tuple[i] == static_cast<int>(n) - 1) tuple[i++] = 0;
    if (i == n) break;
    ++tuple[i];
  }
  return canon.size();
}

// Number of partial injections from a k-set to a j-set, by enumerating all
// (j+1)^k assignment vectors (j meaning "unmapped") and keeping the ones
// injective on their domain.
inline std::uint64_t count_partial_injections(std::size_t k, std::size_t j) {
  std::vector<std::size_t> assign(k, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool injective = true;
    for (std::size_t a = 0; a < k && injective; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (assign[a] < j && assign[a] == assign[b]) {
          injective = false;
          break;
        }
      }
    }
    if (injective) ++count;
    std::size_t i = 0;
    while (i < k && assign[i] == j) assign[i++] = 0;
    if (i == k) break;
    ++assign[i];
  }
  return count;
}

}  // namespace oracles

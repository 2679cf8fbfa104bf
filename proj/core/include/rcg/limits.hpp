#pragma once

#include <cstdint>

namespace rcg {

// Desk-scale bounds. Every operation that can blow up in time or memory
// checks one of these and throws CapExceeded.
struct Limits {
  std::uint64_t order_cap = 10'000'000;
  std::uint64_t class_cap = 2'000'000;
  std::uint64_t normal_scan_cap = 100'000;
  std::uint64_t quotient_degree_cap = 10'000;
  std::uint64_t coset_search_cap = 5'000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace rcg

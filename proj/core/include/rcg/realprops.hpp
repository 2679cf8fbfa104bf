#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcg/classes.hpp"
#include "rcg/perm_group.hpp"

namespace rcg {

struct RealEntry {
  ConjClass cls;
  bool is_central = false;
  std::uint64_t size_2part = 1;
  /// Element order is 1 or a power of an odd prime.
  bool odd_prime_power_order = false;
};

/// The real classes of a group, in class-list order.
struct RealSpectrum {
  std::string group_id;
  std::vector<RealEntry> entries;
  std::vector<std::size_t> odd_ppo_subset;

  /// Distinct sizes of the odd-prime-power-order real classes, ascending.
  std::vector<std::uint64_t> odd_ppo_sizes() const;
  /// Distinct sizes of all real classes, ascending.
  std::vector<std::uint64_t> sizes() const;
};

/// true for 1 and for p^a with p an odd prime.
bool is_odd_prime_power_order(std::uint64_t order);

RealSpectrum real_spectrum(const PermGroup& group, std::string group_id = {});
RealSpectrum real_spectrum(const std::vector<ConjClass>& classes, std::string group_id = {});

struct PropertyVerdict {
  bool holds = true;
  std::optional<ConjClass> violator;
};

/// T: 4 does not divide the size of any odd-prime-power-order real class.
PropertyVerdict has_property_T(const PermGroup& group);
PropertyVerdict has_property_T(const RealSpectrum& spectrum);
/// WT: every such size is a power of 2 or not divisible by 4.
PropertyVerdict has_property_WT(const PermGroup& group);
PropertyVerdict has_property_WT(const RealSpectrum& spectrum);

/// Real classes of odd prime-power order with 4 | size and gcd(order, |Z(G)|) = 1.
std::vector<ConjClass> good_elements(const PermGroup& group);
std::vector<ConjClass> good_elements(const std::vector<ConjClass>& classes,
                                     std::uint64_t center_order);

enum class ConjectureVerdict { Confirmed, Counterexample, Vacuous };
std::string to_string(ConjectureVerdict v);

/// All noncentral real class sizes have the same 2-part.
bool conjecture_c_hypothesis(const RealSpectrum& spectrum);
bool conjecture_c_hypothesis(const PermGroup& group);
/// Vacuous unless the hypothesis holds; then Confirmed iff O^{2'}(G) is 2-nilpotent.
ConjectureVerdict conjecture_c_check(const PermGroup& group);

/// All noncentral real elements have the same centralizer order.
bool navarro_hypothesis(const RealSpectrum& spectrum, std::uint64_t group_order);
bool navarro_hypothesis(const PermGroup& group);

/// Smallest primitive prime divisor of q^n - 1, or nullopt for (2, 6).
/// Requires q >= 2, n >= 3 and q^n - 1 < 2^63.
std::optional<std::uint64_t> zsigmondy_l(std::uint64_t q, std::uint64_t n);

/// Number of decompositions of F_q^n into a 2-space and an (n-2)-space:
/// q^(2(n-2)) (q^n - 1)(q^(n-1) - 1) / ((q - 1)(q^2 - 1)). Throws InvalidInput
/// for n < 3, q not a prime power, or intermediate overflow.
std::uint64_t decomposition_count_t(std::uint64_t n, std::uint64_t q);

}  // namespace rcg

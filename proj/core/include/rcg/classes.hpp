#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rcg/perm_group.hpp"

namespace rcg {

/// A conjugacy class x^G.
struct ConjClass {
  Permutation representative;
  std::uint64_t size = 1;
  std::uint64_t element_order = 1;
  bool is_real = false;
  /// g with representative^g == representative^-1; identity for involutions
  /// and the identity element.
  std::optional<Permutation> reversing_witness;

  std::uint64_t centralizer_order(std::uint64_t group_order) const { return group_order / size; }
};

/// All classes of a group together with an element -> class lookup.
struct ClassPartition {
  std::vector<ConjClass> classes;
  std::unordered_map<Permutation, std::size_t> index_of;

  const ConjClass& class_containing(const Permutation& x) const;
};

struct RealityCheck {
  bool real = false;
  std::optional<Permutation> witness;
};

/// Orbit of x under conjugation by the generators of G. Throws InvalidInput
/// if x is not in G and CapExceeded past limits.class_cap.
ConjClass class_of(const PermGroup& group, const Permutation& x);

/// Classes sorted by (element order, size, representative images).
/// Representatives are the first element met in the enumeration sweep.
std::vector<ConjClass> conjugacy_classes(const PermGroup& group);
ClassPartition classify(const PermGroup& group);

std::uint64_t centralizer_order(const PermGroup& group, const Permutation& x);

RealityCheck is_real(const PermGroup& group, const Permutation& x);

/// Cen_G(x), generated from Schreier generators of the conjugation orbit,
/// stopping once the order reaches |G| / |x^G|.
PermGroup centralizer(const PermGroup& group, const Permutation& x);

/// Cen*_G(x) = { g : x^g in {x, x^-1} }. Throws InvalidInput if x is not real.
PermGroup generalized_centralizer(const PermGroup& group, const Permutation& x);

/// Largest power of p dividing n (n >= 1, p prime).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// x_p = x^(k*alpha) with o(x) = p^a k, p not dividing k, k*alpha = 1 mod p^a.
Permutation element_p_part(const Permutation& x, std::uint64_t p);

// Integer helpers shared by the structural and arithmetic modules.
bool is_prime(std::uint64_t n);
/// Prime factors with multiplicity, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
/// The prime p when n = p^a with a >= 1, otherwise nullopt.
std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n);
bool is_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace rcg

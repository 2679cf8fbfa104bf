#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "rcg/limits.hpp"
#include "rcg/permutation.hpp"

namespace rcg {

namespace detail {
struct ChainData;
}

/// A permutation group given by generators, backed by a stabilizer chain
/// (base, basic orbits with Schreier vectors, strong generators).
///
/// Immutable after construction and cheap to copy: copies share the chain.
/// All queries are const and safe to call concurrently.
class PermGroup {
 public:
  /// Deterministic Schreier-Sims. Base points are appended as the smallest
  /// point moved by the strong generator that needs them. Throws InvalidInput
  /// on an empty or mixed-degree generator list and CapExceeded when the order
  /// passes `limits.order_cap`.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> generators,
                                   const Limits& limits = default_limits());

  /// As from_generators, but the chain starts with `base_prefix` as its first
  /// base points (levels with trivial basic orbits are kept).
  static PermGroup with_base(std::size_t degree, std::vector<Permutation> generators,
                             std::vector<Point> base_prefix,
                             const Limits& limits = default_limits());

  /// Builds the chain by sifting seeded pseudo-random elements until the
  /// product of basic orbit sizes reaches `known_order`. The result is exact
  /// because a partial chain can never overshoot the true order. Throws Error
  /// if the order cannot be reached (the caller's order was wrong).
  static PermGroup with_known_order(std::size_t degree, std::vector<Permutation> generators,
                                    std::uint64_t known_order,
                                    const Limits& limits = default_limits());

  static PermGroup trivial(std::size_t degree, const Limits& limits = default_limits());

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const noexcept;
  const Limits& limits() const noexcept;
  bool is_trivial() const noexcept { return order() == 1; }

  std::vector<Point> base() const;
  std::vector<std::uint64_t> basic_orbit_sizes() const;
  std::size_t chain_length() const noexcept;
  std::span<const Point> basic_orbit(std::size_t level) const;

  /// Transversal element u at `level` with u(base[level]) == point.
  Permutation transversal_element(std::size_t level, Point point) const;

  /// Sifts p through the chain. Returns the residue and the level where
  /// sifting stopped (chain_length() when every level was passed).
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;

  bool contains(const Permutation& p) const;

  /// Every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const {
    return order() == other.order() && contains_group(other);
  }

  /// Visits every element exactly once in a fixed order. Throws CapExceeded
  /// if order() > cap. Returning false from the visitor stops early.
  void for_each_element(const std::function<bool(const Permutation&)>& visit,
                        std::uint64_t cap) const;
  std::vector<Permutation> elements(std::uint64_t cap) const;

  /// Generators with identities and repeats removed.
  std::vector<Permutation> nontrivial_generators() const;

 private:
  explicit PermGroup(std::shared_ptr<const detail::ChainData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::ChainData> data_;
};

/// Subgroup generated by `generators` inside a group of the given degree;
/// an empty list yields the trivial group.
PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                   const Limits& limits = default_limits());

}  // namespace rcg

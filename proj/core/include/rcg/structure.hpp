#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rcg/classes.hpp"
#include "rcg/perm_group.hpp"

namespace rcg {

/// A subgroup of `parent`, carrying its own stabilizer chain on the same points.
struct Subgroup {
  PermGroup parent;
  PermGroup group;

  std::uint64_t order() const noexcept { return group.order(); }
  std::uint64_t index() const noexcept { return parent.order() / group.order(); }
  bool contains(const Permutation& p) const { return group.contains(p); }
  bool is_trivial() const noexcept { return group.is_trivial(); }
  bool is_whole() const noexcept { return group.order() == parent.order(); }
};

/// G/N realized as the right-multiplication action of G on the cosets of N.
///
/// Coset Nx is identified by its lexicographically least element, computed
/// from a chain of N whose base is 0, 1, ..., degree-1.
class QuotientGroup {
 public:
  const PermGroup& parent() const noexcept { return parent_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const PermGroup& image() const noexcept { return image_; }
  std::uint64_t index() const noexcept { return parent_.order() / kernel_.order(); }
  /// Coset representatives in image-point order (empty when N = 1, where the
  /// image is G itself).
  const std::vector<Permutation>& transversal() const noexcept { return transversal_; }
  bool kernel_is_trivial() const noexcept { return !kernel_chain_.has_value(); }

  /// Image point of the coset Nx; coset 0 is N itself. Requires N != 1.
  std::size_t coset_of(const Permutation& x) const;
  Permutation project(const Permutation& x) const;
  /// A coset representative of the element of G/N; project(lift(c)) == c.
  Permutation lift(const Permutation& c) const;
  /// Every element of the coset Nx (|N| elements).
  std::vector<Permutation> coset_elements(const Permutation& x) const;

 private:
  friend QuotientGroup quotient(const PermGroup&, const Subgroup&);
  QuotientGroup(PermGroup parent, Subgroup kernel, PermGroup image)
      : parent_(std::move(parent)), kernel_(std::move(kernel)), image_(std::move(image)) {}

  Permutation canonical(const Permutation& x) const;

  PermGroup parent_;
  Subgroup kernel_;
  PermGroup image_;
  std::optional<PermGroup> kernel_chain_;  // full base 0..degree-1; absent when N = 1
  std::vector<Permutation> transversal_;
  std::unordered_map<Permutation, std::size_t> coset_index_;
};

Subgroup whole_group(const PermGroup& group);
Subgroup trivial_subgroup(const PermGroup& group);
Subgroup subgroup(const PermGroup& parent, std::vector<Permutation> generators);

bool is_normal(const PermGroup& group, const PermGroup& sub);

/// Z(G), generated by the representatives of the size-1 classes.
Subgroup center(const PermGroup& group);
Subgroup center(const PermGroup& group, const std::vector<ConjClass>& classes);

/// Smallest normal subgroup of G containing `elements`.
Subgroup normal_closure(const PermGroup& group, const std::vector<Permutation>& elements);

Subgroup derived_subgroup(const PermGroup& group);
/// G = G^(0) > G^(1) > ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const PermGroup& group);
bool is_solvable(const PermGroup& group);
bool is_abelian(const PermGroup& group);

/// O_p(G), the largest normal p-subgroup.
Subgroup o_p(const PermGroup& group, std::uint64_t p);
Subgroup o_p(const PermGroup& group, std::uint64_t p, const std::vector<ConjClass>& classes);
/// O_{p'}(G), the largest normal subgroup of order prime to p.
Subgroup o_p_prime(const PermGroup& group, std::uint64_t p);
Subgroup o_p_prime(const PermGroup& group, std::uint64_t p, const std::vector<ConjClass>& classes);
/// O^{p'}(G), the smallest normal subgroup of p'-index.
Subgroup o_upper_p_prime(const PermGroup& group, std::uint64_t p);
Subgroup o_upper_p_prime(const PermGroup& group, std::uint64_t p,
                         const std::vector<ConjClass>& classes);

/// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t p);

/// Every normal subgroup, sorted by order then generator images. Throws
/// CapExceeded when |G| > limits.normal_scan_cap.
std::vector<Subgroup> normal_subgroups(const PermGroup& group);
std::vector<Subgroup> normal_subgroups(const PermGroup& group,
                                       const std::vector<ConjClass>& classes);

/// Nonabelian simple: every nontrivial class normally generates G.
bool is_nonabelian_simple(const PermGroup& group);
bool is_nonabelian_simple(const PermGroup& group, const std::vector<ConjClass>& classes);

/// Throws InvalidInput if N is not normal and CapExceeded when the index
/// passes limits.quotient_degree_cap.
QuotientGroup quotient(const PermGroup& group, const Subgroup& kernel);

/// |O_p(G)| = |G|_p.
bool is_p_closed(const PermGroup& group, std::uint64_t p);
bool is_p_closed(const PermGroup& group, std::uint64_t p, const std::vector<ConjClass>& classes);
/// |G : O_{p'}(G)| = |G|_p.
bool is_p_nilpotent(const PermGroup& group, std::uint64_t p);
bool is_p_nilpotent(const PermGroup& group, std::uint64_t p,
                    const std::vector<ConjClass>& classes);
bool is_p_group(std::uint64_t order, std::uint64_t p);

}  // namespace rcg

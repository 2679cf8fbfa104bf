#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcg {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Products read left to right: `p * q` applies p first, then q, so
/// `(p * q)(i) == q(p(i))`. Conjugation follows the same convention,
/// `x^g = g^-1 * x * g`.
class Permutation {
 public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  /// Validates that `images` is a bijection; throws InvalidInput otherwise.
  static Permutation from_images(std::vector<Point> images);

  /// Builds from disjoint cycles on 0-based points. Points in no cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation such as "(1,2,3)(4,5)" or "(0 1)". An empty string
  /// or "()" is the identity. `one_based` shifts every point down by one.
  static Permutation parse_cycles(std::size_t degree, std::string_view text,
                                  bool one_based);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// k-fold product; negative k uses the inverse, k == 0 gives the identity.
  Permutation power(long long k) const;

  /// Least m > 0 with p^m = identity (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// "(1,2,3)(4,5)" style; the identity prints as "()".
  std::string to_cycle_string(bool one_based = true) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images, int /*unchecked*/)
      : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation conjugate(const Permutation& x, const Permutation& g);

  std::vector<Point> images_;
};

/// p first, then q. Throws InvalidInput on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// x^g = g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace rcg

template <>
struct std::hash<rcg::Permutation> : rcg::PermutationHash {};

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcg/limits.hpp"
#include "rcg/perm_group.hpp"

namespace rcg {

enum class GroupKind {
  Symmetric,
  Alternating,
  Cyclic,
  Dihedral,
  Affine,
  Psl2,
  Sl2,
  Gl2,
  DirectProduct,
  File,
};

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(std::string_view name);

/// Recipe for one group of the verification corpus.
///
/// `file` kinds carry either a `path` to a group file or the file's JSON
/// text inline in `inline_json` (used for built-ins such as Q8 and SD16).
struct GroupSpec {
  std::string name;
  GroupKind kind = GroupKind::Cyclic;
  std::vector<std::uint64_t> parameters;
  std::vector<GroupSpec> factors;
  std::string path;
  std::string inline_json;
  std::optional<std::uint64_t> expected_order;
};

/// A built group together with its display name.
struct NamedGroup {
  std::string name;
  PermGroup group;
};

PermGroup build(const GroupSpec& spec, const Limits& limits = default_limits());

PermGroup symmetric_group(std::size_t n, const Limits& limits = default_limits());
PermGroup alternating_group(std::size_t n, const Limits& limits = default_limits());
PermGroup cyclic_group(std::size_t n, const Limits& limits = default_limits());
PermGroup dihedral_group(std::size_t n, const Limits& limits = default_limits());
/// {x -> ax + b} on F_p with a ranging over the order-k subgroup of F_p^*.
PermGroup affine_group(std::uint64_t p, std::uint64_t k, const Limits& limits = default_limits());
/// Moebius action on the projective line, points ordered infinity, 0, ..., p-1.
PermGroup psl2(std::uint64_t p, const Limits& limits = default_limits());
/// Right action on the p^2 - 1 nonzero row vectors (a, b), point a*p + b - 1.
PermGroup sl2(std::uint64_t p, const Limits& limits = default_limits());
PermGroup gl2(std::uint64_t p, const Limits& limits = default_limits());
/// Disjoint-union action; degree is the sum of the factor degrees.
PermGroup direct_product(const std::vector<PermGroup>& factors,
                         const Limits& limits = default_limits());

/// Group file (JSON): {"name", "degree", "one_based" (default true),
/// "generators": [image array | cycle string], "expected_order"?}.
PermGroup load_group(const std::string& path, const Limits& limits = default_limits());
PermGroup parse_group_json(std::string_view text, const Limits& limits = default_limits(),
                           std::string* name_out = nullptr);
/// Writes one_based = false image arrays.
void save_group(const PermGroup& group, const std::string& path, const std::string& name = "");
std::string group_to_json(const PermGroup& group, const std::string& name = "");

/// Parses "sym:4", "alt:7", "psl2:13", "affine:7,3", "q8", "file:PATH", and
/// products joined by '*', e.g. "sym:3*alt:5".
GroupSpec parse_spec_string(std::string_view text);
std::string spec_string(const GroupSpec& spec);

/// Corpus file: a JSON array of GroupSpec objects.
std::vector<GroupSpec> load_corpus(const std::string& path);
std::vector<GroupSpec> parse_corpus_json(std::string_view text);
std::string corpus_to_json(const std::vector<GroupSpec>& corpus);

GroupSpec quaternion8_spec();
GroupSpec semidihedral16_spec();

std::vector<GroupSpec> default_corpus();

}  // namespace rcg

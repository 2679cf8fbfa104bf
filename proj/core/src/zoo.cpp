#include "rcg/zoo.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "rcg/classes.hpp"
#include "rcg/errors.hpp"

namespace rcg {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1U) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

Permutation from_map(std::size_t degree, const std::function<Point(Point)>& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = f(static_cast<Point>(i));
  return Permutation::from_images(std::move(images));
}

std::vector<Point> range_cycle(Point from, Point to) {
  std::vector<Point> c(to - from);
  std::iota(c.begin(), c.end(), from);
  return c;
}

// 2x2 matrix over F_p acting on nonzero row vectors from the right.
Permutation matrix_action(std::uint64_t p, std::uint64_t m00, std::uint64_t m01,
                          std::uint64_t m10, std::uint64_t m11) {
  const std::size_t degree = p * p - 1;
  return from_map(degree, [&](Point idx) {
    const std::uint64_t v = idx + 1;
    const std::uint64_t a = v / p, b = v % p;
    const std::uint64_t na = (a * m00 + b * m10) % p;
    const std::uint64_t nb = (a * m01 + b * m11) % p;
    return static_cast<Point>(na * p + nb - 1);
  });
}

std::string kind_prefix(GroupKind kind) {
  switch (kind) {
    case GroupKind::Symmetric: return "sym";
    case GroupKind::Alternating: return "alt";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Affine: return "affine";
    case GroupKind::Psl2: return "psl2";
    case GroupKind::Sl2: return "sl2";
    case GroupKind::Gl2: return "gl2";
    case GroupKind::DirectProduct: return "product";
    case GroupKind::File: return "file";
  }
  return "?";
}

std::string display_name(const GroupSpec& spec) {
  const auto& p = spec.parameters;
  auto param = [&](std::size_t i) { return i < p.size() ? std::to_string(p[i]) : std::string("?"); };
  switch (spec.kind) {
    case GroupKind::Symmetric: return "Sym(" + param(0) + ")";
    case GroupKind::Alternating: return "Alt(" + param(0) + ")";
    case GroupKind::Cyclic: return "C" + param(0);
    case GroupKind::Dihedral: return p.empty() ? "D?" : "D" + std::to_string(2 * p[0]);
    case GroupKind::Affine: return "Aff(" + param(0) + "," + param(1) + ")";
    case GroupKind::Psl2: return "PSL2(" + param(0) + ")";
    case GroupKind::Sl2: return "SL2(" + param(0) + ")";
    case GroupKind::Gl2: return "GL2(" + param(0) + ")";
    case GroupKind::DirectProduct: {
      std::string out;
      for (const auto& f : spec.factors) {
        if (!out.empty()) out += " x ";
        out += f.name.empty() ? display_name(f) : f.name;
      }
      return out;
    }
    case GroupKind::File: return spec.path.empty() ? "file" : spec.path;
  }
  return "?";
}

std::uint64_t json_uint(const json& v, const std::string& what) {
  require(v.is_number_integer() && v.get<long long>() >= 0, what + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupSpec spec_from_json(const json& j, const std::filesystem::path& base_dir) {
  require(j.is_object(), "corpus entry must be an object");
  GroupSpec spec;
  require(j.contains("kind") && j["kind"].is_string(), "corpus entry needs a string \"kind\"");
  spec.kind = group_kind_from_string(j["kind"].get<std::string>());
  if (j.contains("parameters")) {
    require(j["parameters"].is_array(), "\"parameters\" must be an array");
    for (const auto& v : j["parameters"]) spec.parameters.push_back(json_uint(v, "parameter"));
  }
  if (j.contains("factors")) {
    require(j["factors"].is_array(), "\"factors\" must be an array");
    for (const auto& f : j["factors"]) spec.factors.push_back(spec_from_json(f, base_dir));
  }
  if (j.contains("path")) {
    std::filesystem::path p = j["path"].get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    spec.path = p.string();
  }
  if (j.contains("group")) spec.inline_json = j["group"].dump();
  if (j.contains("expected_order") && !j["expected_order"].is_null()) {
    spec.expected_order = json_uint(j["expected_order"], "expected_order");
  }
  spec.name = j.contains("name") ? j["name"].get<std::string>() : display_name(spec);
  return spec;
}

json spec_to_json(const GroupSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["kind"] = to_string(spec.kind);
  if (!spec.parameters.empty()) j["parameters"] = spec.parameters;
  if (!spec.factors.empty()) {
    j["factors"] = json::array();
    for (const auto& f : spec.factors) j["factors"].push_back(spec_to_json(f));
  }
  if (!spec.path.empty()) j["path"] = spec.path;
  if (!spec.inline_json.empty()) j["group"] = json::parse(spec.inline_json);
  if (spec.expected_order) j["expected_order"] = *spec.expected_order;
  return j;
}

GroupSpec make_spec(GroupKind kind, std::vector<std::uint64_t> params,
                    std::optional<std::uint64_t> expected = std::nullopt) {
  GroupSpec s;
  s.kind = kind;
  s.parameters = std::move(params);
  s.expected_order = expected;
  s.name = display_name(s);
  return s;
}

GroupSpec product_spec(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.kind = GroupKind::DirectProduct;
  s.factors = std::move(factors);
  s.name = display_name(s);
  return s;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::Alternating: return "alternating";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Affine: return "affine";
    case GroupKind::Psl2: return "psl2";
    case GroupKind::Sl2: return "sl2";
    case GroupKind::Gl2: return "gl2";
    case GroupKind::DirectProduct: return "direct_product";
    case GroupKind::File: return "file";
  }
  return "?";
}

GroupKind group_kind_from_string(std::string_view name) {
  if (name == "symmetric" || name == "sym") return GroupKind::Symmetric;
  if (name == "alternating" || name == "alt") return GroupKind::Alternating;
  if (name == "cyclic" || name == "cyc") return GroupKind::Cyclic;
  if (name == "dihedral" || name == "dih") return GroupKind::Dihedral;
  if (name == "affine" || name == "aff") return GroupKind::Affine;
  if (name == "psl2") return GroupKind::Psl2;
  if (name == "sl2") return GroupKind::Sl2;
  if (name == "gl2") return GroupKind::Gl2;
  if (name == "direct_product" || name == "product") return GroupKind::DirectProduct;
  if (name == "file") return GroupKind::File;
  throw InvalidInput("unknown group kind \"" + std::string(name) + "\"");
}

PermGroup symmetric_group(std::size_t n, const Limits& limits) {
  require(n >= 1, "symmetric group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1, limits);
  return PermGroup::from_generators(
      n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {range_cycle(0, n)})},
      limits);
}

PermGroup alternating_group(std::size_t n, const Limits& limits) {
  require(n >= 1, "alternating group needs n >= 1");
  if (n < 3) return PermGroup::trivial(n, limits);
  // (0 1 ... n-1) is even for odd n; for even n use (1 2 ... n-1).
  auto long_cycle = n % 2 == 1 ? range_cycle(0, static_cast<Point>(n))
                               : range_cycle(1, static_cast<Point>(n));
  return PermGroup::from_generators(
      n, {Permutation::from_cycles(n, {{0, 1, 2}}), Permutation::from_cycles(n, {long_cycle})},
      limits);
}

PermGroup cyclic_group(std::size_t n, const Limits& limits) {
  require(n >= 1, "cyclic group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1, limits);
  return PermGroup::from_generators(n, {Permutation::from_cycles(n, {range_cycle(0, n)})}, limits);
}

PermGroup dihedral_group(std::size_t n, const Limits& limits) {
  require(n >= 3, "dihedral group needs n >= 3");
  Permutation rotation = Permutation::from_cycles(n, {range_cycle(0, n)});
  Permutation reflection = from_map(n, [n](Point i) { return static_cast<Point>((n - i) % n); });
  return PermGroup::from_generators(n, {rotation, reflection}, limits);
}

PermGroup affine_group(std::uint64_t p, std::uint64_t k, const Limits& limits) {
  require(is_prime(p), "affine group needs a prime p");
  require(k >= 1 && (p - 1) % k == 0, "affine group needs k dividing p - 1");
  const std::uint64_t a = mod_pow(primitive_root(p), (p - 1) / k, p);
  std::vector<Permutation> gens{
      from_map(p, [p](Point x) { return static_cast<Point>((x + 1) % p); })};
  if (k > 1) gens.push_back(from_map(p, [p, a](Point x) { return static_cast<Point>((a * x) % p); }));
  return PermGroup::from_generators(p, std::move(gens), limits);
}

PermGroup psl2(std::uint64_t p, const Limits& limits) {
  require(p >= 5 && is_prime(p), "psl2 needs a prime p >= 5");
  const std::size_t degree = p + 1;
  // point 0 is infinity, point v+1 is v in F_p.
  Permutation translate = from_map(degree, [p](Point pt) {
    return pt == 0 ? Point{0} : static_cast<Point>((pt - 1 + 1) % p + 1);
  });
  Permutation invert = from_map(degree, [p](Point pt) -> Point {
    if (pt == 0) return 1;
    const std::uint64_t v = pt - 1;
    if (v == 0) return 0;
    return static_cast<Point>((p - mod_inverse(v, p)) % p + 1);
  });
  return PermGroup::from_generators(degree, {translate, invert}, limits);
}

PermGroup sl2(std::uint64_t p, const Limits& limits) {
  require(is_prime(p), "sl2 needs a prime p");
  return PermGroup::from_generators(
      p * p - 1, {matrix_action(p, 1, 1, 0, 1), matrix_action(p, 0, 1, p - 1, 0)}, limits);
}

PermGroup gl2(std::uint64_t p, const Limits& limits) {
  require(is_prime(p), "gl2 needs a prime p");
  return PermGroup::from_generators(p * p - 1,
                                    {matrix_action(p, 1, 1, 0, 1), matrix_action(p, 0, 1, p - 1, 0),
                                     matrix_action(p, primitive_root(p), 0, 0, 1)},
                                    limits);
}

PermGroup direct_product(const std::vector<PermGroup>& factors, const Limits& limits) {
  require(!factors.empty(), "direct product needs at least one factor");
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree(); ++i) {
        images[offset + i] = static_cast<Point>(offset + g(static_cast<Point>(i)));
      }
      gens.push_back(Permutation::from_images(std::move(images)));
    }
    offset += f.degree();
  }
  return PermGroup::from_generators(degree, std::move(gens), limits);
}

PermGroup build(const GroupSpec& spec, const Limits& limits) {
  const auto& p = spec.parameters;
  auto need = [&](std::size_t n) {
    require(p.size() == n, spec.name + ": " + to_string(spec.kind) + " takes " +
                               std::to_string(n) + " parameter(s)");
  };
  std::optional<PermGroup> g;
  switch (spec.kind) {
    case GroupKind::Symmetric: need(1); g = symmetric_group(p[0], limits); break;
    case GroupKind::Alternating: need(1); g = alternating_group(p[0], limits); break;
    case GroupKind::Cyclic: need(1); g = cyclic_group(p[0], limits); break;
    case GroupKind::Dihedral: need(1); g = dihedral_group(p[0], limits); break;
    case GroupKind::Affine: need(2); g = affine_group(p[0], p[1], limits); break;
    case GroupKind::Psl2: need(1); g = psl2(p[0], limits); break;
    case GroupKind::Sl2: need(1); g = sl2(p[0], limits); break;
    case GroupKind::Gl2: need(1); g = gl2(p[0], limits); break;
    case GroupKind::DirectProduct: {
      std::vector<PermGroup> factors;
      for (const auto& f : spec.factors) factors.push_back(build(f, limits));
      g = direct_product(factors, limits);
      break;
    }
    case GroupKind::File:
      if (!spec.inline_json.empty()) g = parse_group_json(spec.inline_json, limits);
      else g = load_group(spec.path, limits);
      break;
  }
  if (spec.expected_order && g->order() != *spec.expected_order) {
    throw InvalidInput(spec.name + ": order " + std::to_string(g->order()) +
                       " does not match expected order " + std::to_string(*spec.expected_order));
  }
  return *g;
}

PermGroup parse_group_json(std::string_view text, const Limits& limits, std::string* name_out) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed group file: ") + e.what());
  }
  require(j.is_object(), "group file must be a JSON object");
  require(j.contains("degree"), "group file needs \"degree\"");
  const std::uint64_t degree = json_uint(j["degree"], "degree");
  require(degree >= 1, "degree must be positive");
  const bool one_based = j.value("one_based", true);
  require(j.contains("generators") && j["generators"].is_array(),
          "group file needs a \"generators\" array");
  require(!j["generators"].empty(), "group file has an empty generator list");
  std::vector<Permutation> gens;
  for (const auto& g : j["generators"]) {
    if (g.is_string()) {
      gens.push_back(Permutation::parse_cycles(degree, g.get<std::string>(), one_based));
    } else if (g.is_array()) {
      require(g.size() == degree, "image array length " + std::to_string(g.size()) +
                                      " does not match degree " + std::to_string(degree));
      std::vector<Point> images;
      for (const auto& v : g) {
        std::uint64_t x = json_uint(v, "image");
        if (one_based) {
          require(x >= 1, "image 0 in a one-based file");
          --x;
        }
        require(x < degree, "image out of range");
        images.push_back(static_cast<Point>(x));
      }
      gens.push_back(Permutation::from_images(std::move(images)));
    } else {
      throw InvalidInput("generator must be an image array or a cycle string");
    }
  }
  PermGroup group = PermGroup::from_generators(degree, std::move(gens), limits);
  if (j.contains("expected_order") && !j["expected_order"].is_null()) {
    const std::uint64_t expected = json_uint(j["expected_order"], "expected_order");
    require(group.order() == expected, "group order " + std::to_string(group.order()) +
                                           " does not match expected_order " +
                                           std::to_string(expected));
  }
  if (name_out) *name_out = j.value("name", std::string{});
  return group;
}

PermGroup load_group(const std::string& path, const Limits& limits) {
  return parse_group_json(read_file(path), limits);
}

std::string group_to_json(const PermGroup& group, const std::string& name) {
  json j;
  j["name"] = name;
  j["degree"] = group.degree();
  j["one_based"] = false;
  j["generators"] = json::array();
  for (const auto& g : group.generators()) {
    j["generators"].push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  }
  j["expected_order"] = group.order();
  return j.dump(2);
}

void save_group(const PermGroup& group, const std::string& path, const std::string& name) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << group_to_json(group, name) << '\n';
}

GroupSpec parse_spec_string(std::string_view text) {
  if (text.find('*') != std::string_view::npos) {
    std::vector<GroupSpec> factors;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t star = text.find('*', start);
      const auto part = text.substr(start, star == std::string_view::npos ? text.npos : star - start);
      factors.push_back(parse_spec_string(part));
      if (star == std::string_view::npos) break;
      start = star + 1;
    }
    return product_spec(std::move(factors));
  }
  if (text == "q8") return quaternion8_spec();
  if (text == "sd16") return semidihedral16_spec();
  const std::size_t colon = text.find(':');
  require(colon != std::string_view::npos,
          "group spec \"" + std::string(text) + "\" must look like kind:params or file:PATH");
  const auto kind_text = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind_text == "file") {
    GroupSpec s;
    s.kind = GroupKind::File;
    s.path = std::string(rest);
    std::string name;
    try {
      parse_group_json(read_file(s.path), default_limits(), &name);
    } catch (const Error&) {
      // Reported again, with context, when the group is built.
    }
    s.name = name.empty() ? s.path : name;
    return s;
  }
  GroupSpec s;
  s.kind = group_kind_from_string(kind_text);
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t comma = rest.find(',', start);
    if (comma == std::string_view::npos) comma = rest.size();
    const auto num = rest.substr(start, comma - start);
    require(!num.empty() && num.find_first_not_of("0123456789") == std::string_view::npos,
            "bad parameter \"" + std::string(num) + "\" in group spec");
    s.parameters.push_back(std::stoull(std::string(num)));
    start = comma + 1;
  }
  s.name = display_name(s);
  return s;
}

std::string spec_string(const GroupSpec& spec) {
  if (spec.kind == GroupKind::DirectProduct) {
    std::string out;
    for (const auto& f : spec.factors) {
      if (!out.empty()) out += '*';
      out += spec_string(f);
    }
    return out;
  }
  if (spec.kind == GroupKind::File) {
    if (spec.name == "Q8") return "q8";
    if (spec.name == "SD16") return "sd16";
    return "file:" + spec.path;
  }
  std::string out = kind_prefix(spec.kind) + ":";
  for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.parameters[i]);
  }
  return out;
}

std::vector<GroupSpec> parse_corpus_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed corpus file: ") + e.what());
  }
  require(j.is_array(), "corpus file must be a JSON array");
  std::vector<GroupSpec> out;
  for (const auto& entry : j) out.push_back(spec_from_json(entry, {}));
  return out;
}

std::vector<GroupSpec> load_corpus(const std::string& path) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed corpus file: ") + e.what());
  }
  require(j.is_array(), "corpus file must be a JSON array");
  const auto dir = std::filesystem::path(path).parent_path();
  std::vector<GroupSpec> out;
  for (const auto& entry : j) out.push_back(spec_from_json(entry, dir));
  return out;
}

std::string corpus_to_json(const std::vector<GroupSpec>& corpus) {
  json j = json::array();
  for (const auto& s : corpus) j.push_back(spec_to_json(s));
  return j.dump(2);
}

GroupSpec quaternion8_spec() {
  GroupSpec s;
  s.name = "Q8";
  s.kind = GroupKind::File;
  // Right-regular action on {1, i, j, k, -1, -i, -j, -k}.
  s.inline_json =
      R"json({"name":"Q8","degree":8,"one_based":true,)json"
      R"json("generators":["(1,2,5,6)(3,8,7,4)","(1,3,5,7)(2,4,6,8)"],"expected_order":8})json";
  s.expected_order = 8;
  return s;
}

GroupSpec semidihedral16_spec() {
  GroupSpec s;
  s.name = "SD16";
  s.kind = GroupKind::File;
  // <a, b | a^8 = b^2 = 1, a^b = a^3> on Z/8: a = x+1, b = 3x.
  s.inline_json =
      R"json({"name":"SD16","degree":8,"one_based":true,)json"
      R"json("generators":["(1,2,3,4,5,6,7,8)","(2,4)(3,7)(6,8)"],"expected_order":16})json";
  s.expected_order = 16;
  return s;
}

std::vector<GroupSpec> default_corpus() {
  using K = GroupKind;
  std::vector<GroupSpec> c;
  for (std::uint64_t n = 3; n <= 8; ++n) c.push_back(make_spec(K::Symmetric, {n}, factorial(n)));
  for (std::uint64_t n = 4; n <= 9; ++n) c.push_back(make_spec(K::Alternating, {n}, factorial(n) / 2));
  for (std::uint64_t n : {2, 3, 5, 6, 8, 9, 12, 15}) c.push_back(make_spec(K::Cyclic, {n}, n));
  for (std::uint64_t n : {3, 4, 5, 6, 8, 10, 12}) c.push_back(make_spec(K::Dihedral, {n}, 2 * n));
  c.push_back(quaternion8_spec());
  c.push_back(semidihedral16_spec());
  // Odd-order Frobenius groups and 2-nilpotent affine samples.
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 3}, {13, 3}, {11, 5}, {31, 5}, {5, 4}, {7, 6}, {13, 4}, {13, 12}}) {
    c.push_back(make_spec(K::Affine, {p, k}, p * k));
  }
  for (std::uint64_t p : {5, 7, 11, 13}) c.push_back(make_spec(K::Psl2, {p}, (p * p * p - p) / 2));
  c.push_back(make_spec(K::Sl2, {3}, 24));
  c.push_back(make_spec(K::Sl2, {5}, 120));
  c.push_back(make_spec(K::Gl2, {3}, 48));
  auto sym = [&](std::uint64_t n) { return make_spec(K::Symmetric, {n}); };
  auto alt = [&](std::uint64_t n) { return make_spec(K::Alternating, {n}); };
  auto cyc = [&](std::uint64_t n) { return make_spec(K::Cyclic, {n}); };
  auto dih = [&](std::uint64_t n) { return make_spec(K::Dihedral, {n}); };
  c.push_back(product_spec({sym(3), sym(3)}));
  c.push_back(product_spec({sym(3), cyc(3)}));
  c.push_back(product_spec({alt(4), cyc(2)}));
  c.push_back(product_spec({dih(4), cyc(3)}));
  c.push_back(product_spec({quaternion8_spec(), cyc(3)}));
  c.push_back(product_spec({sym(4), cyc(2)}));
  c.push_back(product_spec({dih(5), sym(3)}));
  c.push_back(product_spec({make_spec(K::Affine, {7, 3}), cyc(3)}));
  c.push_back(product_spec({sym(3), alt(5)}));
  c.push_back(product_spec({alt(5), cyc(2)}));
  c.push_back(product_spec({alt(4), alt(5)}));
  c.push_back(product_spec({make_spec(K::Psl2, {7}), cyc(3)}));
  return c;
}

}  // namespace rcg

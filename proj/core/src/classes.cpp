#include "rcg/classes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

constexpr std::uint32_t kNoParent = 0xffffffffU;

// Conjugation orbit with a spanning tree: element i = parent^gens[via].
struct ConjugationOrbit {
  std::vector<Permutation> elements;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via;
  std::unordered_map<Permutation, std::uint32_t> index;

  // g with elements[0]^g == elements[i].
  Permutation conjugator(std::uint32_t i, const std::vector<Permutation>& gens) const {
    std::vector<std::uint32_t> path;
    while (parent[i] != kNoParent) {
      path.push_back(via[i]);
      i = parent[i];
    }
    Permutation g(elements[0].degree());
    for (auto it = path.rbegin(); it != path.rend(); ++it) g = compose(g, gens[*it]);
    return g;
  }
};

ConjugationOrbit conjugation_orbit(const std::vector<Permutation>& gens, const Permutation& x,
                                   std::uint64_t cap) {
  ConjugationOrbit orbit;
  orbit.elements.push_back(x);
  orbit.parent.push_back(kNoParent);
  orbit.via.push_back(0);
  orbit.index.emplace(x, 0);
  for (std::size_t i = 0; i < orbit.elements.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation y = conjugate(orbit.elements[i], gens[k]);
      if (orbit.index.contains(y)) continue;
      if (orbit.elements.size() >= cap) {
        throw CapExceeded("conjugacy class exceeds class cap " + std::to_string(cap));
      }
      const auto idx = static_cast<std::uint32_t>(orbit.elements.size());
      orbit.index.emplace(y, idx);
      orbit.elements.push_back(std::move(y));
      orbit.parent.push_back(static_cast<std::uint32_t>(i));
      orbit.via.push_back(static_cast<std::uint32_t>(k));
    }
  }
  return orbit;
}

ConjClass make_class(const PermGroup& group, const ConjugationOrbit& orbit) {
  ConjClass c;
  c.representative = orbit.elements[0];
  c.size = orbit.elements.size();
  c.element_order = c.representative.order();
  const Permutation inv = c.representative.inverse();
  if (inv == c.representative) {
    c.is_real = true;
    c.reversing_witness = Permutation(group.degree());
  } else if (auto it = orbit.index.find(inv); it != orbit.index.end()) {
    c.is_real = true;
    c.reversing_witness = orbit.conjugator(it->second, group.generators());
  }
  return c;
}

void require_member(const PermGroup& group, const Permutation& x) {
  if (x.degree() != group.degree()) throw InvalidInput("element degree does not match group");
  if (!group.contains(x)) throw InvalidInput("element " + x.to_cycle_string() + " is not in the group");
}

bool class_less(const ConjClass& a, const ConjClass& b) {
  if (a.element_order != b.element_order) return a.element_order < b.element_order;
  if (a.size != b.size) return a.size < b.size;
  return a.representative < b.representative;
}

}  // namespace

const ConjClass& ClassPartition::class_containing(const Permutation& x) const {
  auto it = index_of.find(x);
  if (it == index_of.end()) throw InvalidInput("element not in partitioned group");
  return classes[it->second];
}

ConjClass class_of(const PermGroup& group, const Permutation& x) {
  require_member(group, x);
  return make_class(group, conjugation_orbit(group.generators(), x, group.limits().class_cap));
}

ClassPartition classify(const PermGroup& group) {
  const auto& limits = group.limits();
  ClassPartition out;
  std::vector<std::vector<Permutation>> members;
  group.for_each_element([&](const Permutation& g) {
    if (out.index_of.contains(g)) return true;
    ConjugationOrbit orbit = conjugation_orbit(group.generators(), g, limits.class_cap);
    const std::size_t idx = out.classes.size();
    out.classes.push_back(make_class(group, orbit));
    for (auto& e : orbit.elements) out.index_of.emplace(std::move(e), idx);
    return true;
  }, limits.order_cap);

  // Canonical ordering; remap the lookup table.
  std::vector<std::size_t> perm(out.classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return class_less(out.classes[a], out.classes[b]); });
  std::vector<std::size_t> rank(perm.size());
  std::vector<ConjClass> sorted;
  sorted.reserve(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    sorted.push_back(std::move(out.classes[perm[i]]));
  }
  out.classes = std::move(sorted);
  for (auto& [elem, idx] : out.index_of) idx = rank[idx];
  return out;
}

std::vector<ConjClass> conjugacy_classes(const PermGroup& group) {
  return classify(group).classes;
}

std::uint64_t centralizer_order(const PermGroup& group, const Permutation& x) {
  return group.order() / class_of(group, x).size;
}

RealityCheck is_real(const PermGroup& group, const Permutation& x) {
  ConjClass c = class_of(group, x);
  return {c.is_real, c.reversing_witness};
}

PermGroup centralizer(const PermGroup& group, const Permutation& x) {
  require_member(group, x);
  const auto& gens = group.generators();
  ConjugationOrbit orbit = conjugation_orbit(gens, x, group.limits().class_cap);
  const std::uint64_t target = group.order() / orbit.elements.size();
  std::vector<Permutation> cgens;
  PermGroup current = PermGroup::trivial(group.degree(), group.limits());
  if (target == 1) return current;
  // Schreier generators u_y s u_{y^s}^-1 of the conjugation action.
  std::vector<Permutation> trans;
  trans.reserve(orbit.elements.size());
  trans.emplace_back(group.degree());
  for (std::size_t i = 1; i < orbit.elements.size(); ++i) {
    trans.push_back(compose(trans[orbit.parent[i]], gens[orbit.via[i]]));
  }
  for (std::size_t i = 0; i < orbit.elements.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Permutation y = conjugate(orbit.elements[i], gens[k]);
      const std::uint32_t j = orbit.index.at(y);
      Permutation s = compose(compose(trans[i], gens[k]), trans[j].inverse());
      if (s.is_identity() || current.contains(s)) continue;
      cgens.push_back(std::move(s));
      current = PermGroup::from_generators(group.degree(), cgens, group.limits());
      if (current.order() == target) return current;
    }
  }
  if (current.order() != target) throw Error("centralizer construction did not reach |G|/|x^G|");
  return current;
}

PermGroup generalized_centralizer(const PermGroup& group, const Permutation& x) {
  ConjClass c = class_of(group, x);
  if (!c.is_real) throw InvalidInput("generalized centralizer requested for a non-real element");
  PermGroup cen = centralizer(group, x);
  std::vector<Permutation> gens = cen.generators();
  gens.push_back(*c.reversing_witness);
  return PermGroup::from_generators(group.degree(), std::move(gens), group.limits());
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidInput("p_part of zero");
  if (p < 2) throw InvalidInput("p_part needs a prime");
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

Permutation element_p_part(const Permutation& x, std::uint64_t p) {
  const std::uint64_t n = x.order();
  const std::uint64_t pa = p_part(n, p);
  if (pa == 1) return Permutation(x.degree());
  const std::uint64_t k = n / pa;
  // alpha = k^-1 mod p^a by extended Euclid.
  long long r0 = static_cast<long long>(pa), r1 = static_cast<long long>(k % pa);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  const long long alpha = ((t0 % static_cast<long long>(pa)) + static_cast<long long>(pa)) %
                          static_cast<long long>(pa);
  const auto exponent = static_cast<long long>((static_cast<unsigned __int128>(k) *
                                                static_cast<std::uint64_t>(alpha)) %
                                               n);
  return x.power(exponent);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

std::optional<std::uint64_t> prime_of_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace rcg

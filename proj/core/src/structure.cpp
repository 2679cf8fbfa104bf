#include "rcg/structure.hpp"

#include <algorithm>
#include <numeric>

#include "rcg/errors.hpp"

namespace rcg {

namespace {

// Adds each element not yet in the generated subgroup; rebuilds on growth.
class SubgroupAccumulator {
 public:
  explicit SubgroupAccumulator(const PermGroup& ambient)
      : ambient_(ambient), current_(PermGroup::trivial(ambient.degree(), ambient.limits())) {}

  bool add(const Permutation& g) {
    if (g.is_identity() || current_.contains(g)) return false;
    gens_.push_back(g);
    current_ = PermGroup::from_generators(ambient_.degree(), gens_, ambient_.limits());
    return true;
  }

  const PermGroup& group() const { return current_; }
  const std::vector<Permutation>& gens() const { return gens_; }

 private:
  const PermGroup& ambient_;
  PermGroup current_;
  std::vector<Permutation> gens_;
};

Subgroup closure_under_conjugation(const PermGroup& group, SubgroupAccumulator acc) {
  const auto conjugators = group.nontrivial_generators();
  for (std::size_t i = 0; i < acc.gens().size(); ++i) {
    for (const auto& g : conjugators) {
      // acc.gens() may grow while we scan it; copy the element first.
      const Permutation h = acc.gens()[i];
      acc.add(conjugate(h, g));
    }
  }
  return {group, acc.group()};
}

bool is_p_power(std::uint64_t n, std::uint64_t p) { return is_power_of(n, p); }

Subgroup join_of_class_closures(const PermGroup& group, const std::vector<ConjClass>& classes,
                                bool want_p_group, std::uint64_t p) {
  SubgroupAccumulator join(group);
  for (const auto& c : classes) {
    if (c.element_order == 1) continue;
    if (want_p_group ? !is_p_power(c.element_order, p) : c.element_order % p == 0) continue;
    if (join.group().contains(c.representative)) continue;
    Subgroup atom = normal_closure(group, {c.representative});
    const bool fits = want_p_group ? is_p_power(atom.order(), p) : atom.order() % p != 0;
    if (!fits) continue;
    for (const auto& g : atom.group.nontrivial_generators()) join.add(g);
  }
  return {group, join.group()};
}

}  // namespace

Subgroup whole_group(const PermGroup& group) { return {group, group}; }

Subgroup trivial_subgroup(const PermGroup& group) {
  return {group, PermGroup::trivial(group.degree(), group.limits())};
}

Subgroup subgroup(const PermGroup& parent, std::vector<Permutation> generators) {
  for (const auto& g : generators) {
    if (!parent.contains(g)) throw InvalidInput("subgroup generator not in parent group");
  }
  return {parent, generate(parent.degree(), std::move(generators), parent.limits())};
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
  if (!group.contains_group(sub)) return false;
  const auto conjugators = group.nontrivial_generators();
  for (const auto& h : sub.generators()) {
    for (const auto& g : conjugators) {
      if (!sub.contains(conjugate(h, g))) return false;
    }
  }
  return true;
}

Subgroup center(const PermGroup& group) { return center(group, conjugacy_classes(group)); }

Subgroup center(const PermGroup& group, const std::vector<ConjClass>& classes) {
  std::vector<Permutation> gens;
  for (const auto& c : classes) {
    if (c.size == 1 && !c.representative.is_identity()) gens.push_back(c.representative);
  }
  return {group, generate(group.degree(), std::move(gens), group.limits())};
}

Subgroup normal_closure(const PermGroup& group, const std::vector<Permutation>& elements) {
  SubgroupAccumulator acc(group);
  for (const auto& e : elements) {
    if (e.degree() != group.degree()) throw InvalidInput("element degree does not match group");
    acc.add(e);
  }
  return closure_under_conjugation(group, std::move(acc));
}

bool is_abelian(const PermGroup& group) {
  const auto gens = group.nontrivial_generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

Subgroup derived_subgroup(const PermGroup& group) {
  const auto gens = group.nontrivial_generators();
  std::vector<Permutation> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return normal_closure(group, comms);
}

std::vector<Subgroup> derived_series(const PermGroup& group) {
  std::vector<Subgroup> series{whole_group(group)};
  for (;;) {
    const PermGroup& last = series.back().group;
    Subgroup next = derived_subgroup(last);
    if (next.order() == last.order()) break;
    series.push_back({group, next.group});
    if (next.is_trivial()) break;
  }
  return series;
}

bool is_solvable(const PermGroup& group) { return derived_series(group).back().is_trivial(); }

Subgroup o_p(const PermGroup& group, std::uint64_t p) {
  return o_p(group, p, conjugacy_classes(group));
}

Subgroup o_p(const PermGroup& group, std::uint64_t p, const std::vector<ConjClass>& classes) {
  if (!is_prime(p)) throw InvalidInput("o_p needs a prime");
  return join_of_class_closures(group, classes, true, p);
}

Subgroup o_p_prime(const PermGroup& group, std::uint64_t p) {
  return o_p_prime(group, p, conjugacy_classes(group));
}

Subgroup o_p_prime(const PermGroup& group, std::uint64_t p,
                   const std::vector<ConjClass>& classes) {
  if (!is_prime(p)) throw InvalidInput("o_p_prime needs a prime");
  return join_of_class_closures(group, classes, false, p);
}

Subgroup o_upper_p_prime(const PermGroup& group, std::uint64_t p) {
  return o_upper_p_prime(group, p, conjugacy_classes(group));
}

Subgroup o_upper_p_prime(const PermGroup& group, std::uint64_t p,
                         const std::vector<ConjClass>& classes) {
  if (!is_prime(p)) throw InvalidInput("o_upper_p_prime needs a prime");
  std::vector<Permutation> parts;
  for (const auto& c : classes) {
    Permutation xp = element_p_part(c.representative, p);
    if (!xp.is_identity()) parts.push_back(std::move(xp));
  }
  return normal_closure(group, parts);
}

Subgroup sylow_subgroup(const PermGroup& group, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("sylow_subgroup needs a prime");
  const std::uint64_t target = p_part(group.order(), p);
  if (target == 1) return trivial_subgroup(group);
  const std::uint64_t cap = group.limits().order_cap;
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(group.degree(), group.limits());
  while (current.order() < target) {
    // Any g outside P normalizing P with g^p in P extends P by a factor p.
    std::optional<Permutation> extension;
    group.for_each_element([&](const Permutation& g) {
      if (current.contains(g) || !current.contains(g.power(static_cast<long long>(p)))) return true;
      for (const auto& h : current.generators()) {
        if (!current.contains(conjugate(h, g))) return true;
      }
      extension = g;
      return false;
    }, cap);
    if (!extension) throw Error("no p-element extends the current p-subgroup");
    gens.push_back(*extension);
    current = PermGroup::from_generators(group.degree(), gens, group.limits());
  }
  return {group, current};
}

std::vector<Subgroup> normal_subgroups(const PermGroup& group) {
  if (group.order() > group.limits().normal_scan_cap) {
    throw CapExceeded("normal subgroup scan refused: order " + std::to_string(group.order()) +
                      " exceeds cap " + std::to_string(group.limits().normal_scan_cap));
  }
  return normal_subgroups(group, conjugacy_classes(group));
}

std::vector<Subgroup> normal_subgroups(const PermGroup& group,
                                       const std::vector<ConjClass>& classes) {
  if (group.order() > group.limits().normal_scan_cap) {
    throw CapExceeded("normal subgroup scan refused: order " + std::to_string(group.order()) +
                      " exceeds cap " + std::to_string(group.limits().normal_scan_cap));
  }
  std::vector<PermGroup> lattice{PermGroup::trivial(group.degree(), group.limits())};
  auto known = [&](const PermGroup& h) {
    return std::any_of(lattice.begin(), lattice.end(),
                       [&](const PermGroup& k) { return k.same_group(h); });
  };
  for (const auto& c : classes) {
    if (c.representative.is_identity()) continue;
    Subgroup atom = normal_closure(group, {c.representative});
    if (!known(atom.group)) lattice.push_back(atom.group);
  }
  // Every normal subgroup is a join of class closures; close under pairwise joins.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const PermGroup a = lattice[i];
      const PermGroup b = lattice[j];
      if (a.contains_group(b) || b.contains_group(a)) continue;
      std::vector<Permutation> gens = a.nontrivial_generators();
      for (const auto& g : b.nontrivial_generators()) {
        if (!a.contains(g)) gens.push_back(g);
      }
      PermGroup joined = PermGroup::from_generators(group.degree(), gens, group.limits());
      if (!known(joined)) lattice.push_back(joined);
    }
  }
  std::stable_sort(lattice.begin(), lattice.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.generators() < b.generators();
  });
  std::vector<Subgroup> out;
  out.reserve(lattice.size());
  for (auto& h : lattice) out.push_back({group, std::move(h)});
  return out;
}

bool is_nonabelian_simple(const PermGroup& group) {
  if (group.order() == 1 || is_abelian(group)) return false;
  return is_nonabelian_simple(group, conjugacy_classes(group));
}

bool is_nonabelian_simple(const PermGroup& group, const std::vector<ConjClass>& classes) {
  if (group.order() == 1 || is_abelian(group)) return false;
  for (const auto& c : classes) {
    if (c.representative.is_identity()) continue;
    if (normal_closure(group, {c.representative}).order() != group.order()) return false;
  }
  return true;
}

QuotientGroup quotient(const PermGroup& group, const Subgroup& kernel) {
  if (kernel.group.degree() != group.degree()) throw InvalidInput("kernel degree mismatch");
  if (!is_normal(group, kernel.group)) throw InvalidInput("quotient by a non-normal subgroup");
  const std::uint64_t index = group.order() / kernel.order();
  if (kernel.is_trivial()) {
    return QuotientGroup(group, Subgroup{group, kernel.group}, group);
  }
  if (index > group.limits().quotient_degree_cap) {
    throw CapExceeded("quotient index " + std::to_string(index) + " exceeds quotient degree cap " +
                      std::to_string(group.limits().quotient_degree_cap));
  }
  const std::size_t d = group.degree();
  std::vector<Point> full_base(d);
  std::iota(full_base.begin(), full_base.end(), Point{0});

  QuotientGroup q(group, Subgroup{group, kernel.group}, PermGroup::trivial(1));
  q.kernel_chain_ = PermGroup::with_base(d, kernel.group.generators(), full_base, group.limits());

  const auto gens = group.generators();
  q.transversal_.push_back(Permutation(d));
  q.coset_index_.emplace(Permutation(d), 0);
  std::vector<std::vector<Point>> image_gens(gens.size());
  for (std::size_t i = 0; i < q.transversal_.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation key = q.canonical(compose(q.transversal_[i], gens[k]));
      auto [it, inserted] = q.coset_index_.try_emplace(key, q.transversal_.size());
      if (inserted) {
        if (q.transversal_.size() >= index) throw Error("coset enumeration overran the index");
        q.transversal_.push_back(std::move(key));
      }
      image_gens[k].push_back(static_cast<Point>(it->second));
    }
  }
  if (q.transversal_.size() != index) throw Error("coset enumeration did not reach the index");
  std::vector<Permutation> images;
  images.reserve(gens.size());
  for (auto& img : image_gens) images.push_back(Permutation::from_images(std::move(img)));
  q.image_ = PermGroup::with_known_order(index, std::move(images), index, group.limits());
  return q;
}

Permutation QuotientGroup::canonical(const Permutation& x) const {
  // Least element of {n * x : n in N}: fix positions 0, 1, ... greedily.
  const PermGroup& chain = *kernel_chain_;
  std::vector<Point> m(x.images().begin(), x.images().end());
  for (std::size_t l = 0; l < chain.chain_length(); ++l) {
    const auto orbit = chain.basic_orbit(l);
    if (orbit.size() == 1) continue;
    Point best = orbit[0];
    for (Point beta : orbit) {
      if (m[beta] < m[best]) best = beta;
    }
    if (best == orbit[0]) continue;
    const Permutation u = chain.transversal_element(l, best);
    std::vector<Point> next(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) next[i] = m[u(static_cast<Point>(i))];
    m = std::move(next);
  }
  return Permutation::from_images(std::move(m));
}

std::size_t QuotientGroup::coset_of(const Permutation& x) const {
  if (!kernel_chain_) throw InvalidInput("coset_of on a quotient by the trivial group");
  return coset_index_.at(canonical(x));
}

Permutation QuotientGroup::project(const Permutation& x) const {
  if (!kernel_chain_) return x;
  std::vector<Point> images(transversal_.size());
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    images[i] = static_cast<Point>(coset_index_.at(canonical(compose(transversal_[i], x))));
  }
  return Permutation::from_images(std::move(images));
}

Permutation QuotientGroup::lift(const Permutation& c) const {
  if (!kernel_chain_) return c;
  return transversal_.at(c(0));
}

std::vector<Permutation> QuotientGroup::coset_elements(const Permutation& x) const {
  std::vector<Permutation> out;
  kernel_.group.for_each_element([&](const Permutation& n) {
    out.push_back(compose(n, x));
    return true;
  }, parent_.limits().order_cap);
  return out;
}

bool is_p_group(std::uint64_t order, std::uint64_t p) { return is_power_of(order, p); }

bool is_p_closed(const PermGroup& group, std::uint64_t p) {
  return is_p_closed(group, p, conjugacy_classes(group));
}

bool is_p_closed(const PermGroup& group, std::uint64_t p, const std::vector<ConjClass>& classes) {
  return o_p(group, p, classes).order() == p_part(group.order(), p);
}

bool is_p_nilpotent(const PermGroup& group, std::uint64_t p) {
  return is_p_nilpotent(group, p, conjugacy_classes(group));
}

bool is_p_nilpotent(const PermGroup& group, std::uint64_t p,
                    const std::vector<ConjClass>& classes) {
  return o_p_prime(group, p, classes).index() == p_part(group.order(), p);
}

}  // namespace rcg

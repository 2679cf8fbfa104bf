#include "rcg/perm_group.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "rcg/errors.hpp"

namespace rcg {
namespace detail {

namespace {
constexpr std::int32_t kAbsent = -2;
constexpr std::int32_t kRoot = -1;
// Explicit inverse transversals are kept while orbit * degree stays below this.
constexpr std::size_t kExplicitTransversalBudget = std::size_t{1} << 20;
}  // namespace

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> gens_inv;
  std::vector<std::int32_t> via;  // generator index that reached the point
  std::vector<std::int32_t> pos;  // position in orbit, or -1
  std::vector<Point> orbit;
  std::vector<Permutation> inv_trans;  // aligned with orbit when non-empty
  // Schreier-Sims progress: pairs (orbit[i], gens[k]) before this are verified.
  std::size_t done_beta = 0;
  std::size_t done_gen = 0;
};

struct ChainData {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
  std::vector<Level> levels;
  std::uint64_t order = 1;
  Limits limits;
};

namespace {

void in_place_compose(std::vector<Point>& h, const Permutation& s) {
  for (auto& v : h) v = s(v);
}

class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, const Limits& limits) {
    data_.degree = degree;
    data_.limits = limits;
  }

  ChainData& data() { return data_; }

  void add_level(Point base) {
    Level level;
    level.base = base;
    level.via.assign(data_.degree, kAbsent);
    level.pos.assign(data_.degree, -1);
    level.via[base] = kRoot;
    level.pos[base] = 0;
    level.orbit = {base};
    data_.levels.push_back(std::move(level));
  }

  bool has_base_point(Point p) const {
    return std::any_of(data_.levels.begin(), data_.levels.end(),
                       [&](const Level& l) { return l.base == p; });
  }

  bool fixes_base(const Permutation& g, std::size_t upto) const {
    for (std::size_t l = 0; l < upto; ++l) {
      if (g(data_.levels[l].base) != data_.levels[l].base) return false;
    }
    return true;
  }

  void add_generator_to_level(std::size_t l, const Permutation& g) {
    Level& level = data_.levels[l];
    level.gens.push_back(g);
    level.gens_inv.push_back(g.inverse());
    rebuild_orbit(l);
  }

  void rebuild_orbit(std::size_t l) {
    Level& level = data_.levels[l];
    std::fill(level.via.begin(), level.via.end(), kAbsent);
    std::fill(level.pos.begin(), level.pos.end(), -1);
    level.orbit.assign(1, level.base);
    level.via[level.base] = kRoot;
    level.pos[level.base] = 0;
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      const Point pt = level.orbit[i];
      for (std::size_t k = 0; k < level.gens.size(); ++k) {
        const Point q = level.gens[k](pt);
        if (level.via[q] == kAbsent) {
          level.via[q] = static_cast<std::int32_t>(k);
          level.pos[q] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(q);
        }
      }
    }
    level.inv_trans.clear();
    if (level.orbit.size() * data_.degree <= kExplicitTransversalBudget) {
      level.inv_trans.reserve(level.orbit.size());
      level.inv_trans.emplace_back(data_.degree);
      for (std::size_t i = 1; i < level.orbit.size(); ++i) {
        const Point q = level.orbit[i];
        const auto k = static_cast<std::size_t>(level.via[q]);
        const Point parent = level.gens_inv[k](q);
        level.inv_trans.push_back(
            compose(level.gens_inv[k], level.inv_trans[static_cast<std::size_t>(level.pos[parent])]));
      }
    }
    level.done_beta = 0;
    level.done_gen = 0;
    update_order();
  }

  void update_order() {
    unsigned __int128 product = 1;
    for (const auto& level : data_.levels) {
      product *= level.orbit.size();
      if (product > data_.limits.order_cap) {
        throw CapExceeded("group order exceeds order cap " +
                          std::to_string(data_.limits.order_cap));
      }
    }
    data_.order = static_cast<std::uint64_t>(product);
  }

  // Residue of g sifted through levels [start, end), and the stop level.
  std::pair<Permutation, std::size_t> strip(const Permutation& g, std::size_t start) const {
    std::vector<Point> h(g.images().begin(), g.images().end());
    std::size_t l = start;
    for (; l < data_.levels.size(); ++l) {
      const Level& level = data_.levels[l];
      Point beta = h[level.base];
      const std::int32_t p = level.pos[beta];
      if (p < 0) break;
      if (!level.inv_trans.empty()) {
        in_place_compose(h, level.inv_trans[static_cast<std::size_t>(p)]);
      } else {
        while (beta != level.base) {
          const auto k = static_cast<std::size_t>(level.via[beta]);
          in_place_compose(h, level.gens_inv[k]);
          beta = level.gens_inv[k](beta);
        }
      }
    }
    return {Permutation::from_images(std::move(h)), l};
  }

  Permutation transversal(std::size_t l, Point beta) const {
    const Level& level = data_.levels[l];
    if (!level.inv_trans.empty()) {
      return level.inv_trans[static_cast<std::size_t>(level.pos[beta])].inverse();
    }
    std::vector<std::size_t> path;
    while (beta != level.base) {
      const auto k = static_cast<std::size_t>(level.via[beta]);
      path.push_back(k);
      beta = level.gens_inv[k](beta);
    }
    Permutation u(data_.degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(u, level.gens[*it]);
    return u;
  }

  // Places g (which fixes the first `dropout` base points) into levels
  // [from, dropout], appending a base point first if g fixes the whole base.
  void install(const Permutation& g, std::size_t from, std::size_t dropout) {
    if (dropout == data_.levels.size()) add_level(g.first_moved_point());
    for (std::size_t l = from; l <= dropout; ++l) add_generator_to_level(l, g);
  }

  void seed(const std::vector<Permutation>& gens, const std::vector<Point>& base_prefix) {
    for (Point b : base_prefix) {
      if (b >= data_.degree) throw InvalidInput("base point out of range");
      if (!has_base_point(b)) add_level(b);
    }
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      if (fixes_base(g, data_.levels.size())) add_level(g.first_moved_point());
    }
    for (std::size_t l = 0; l < data_.levels.size(); ++l) {
      Level& level = data_.levels[l];
      for (const auto& g : gens) {
        if (g.is_identity() || !fixes_base(g, l)) continue;
        level.gens.push_back(g);
        level.gens_inv.push_back(g.inverse());
      }
    }
    for (std::size_t l = 0; l < data_.levels.size(); ++l) rebuild_orbit(l);
  }

  void schreier_sims() {
    auto i = static_cast<std::ptrdiff_t>(data_.levels.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool restarted = false;
      for (std::size_t b = data_.levels[li].done_beta;
           b < data_.levels[li].orbit.size() && !restarted; ++b) {
        const Level& level = data_.levels[li];
        const Point beta = level.orbit[b];
        const Permutation u_beta = transversal(li, beta);
        const std::size_t k0 = (b == level.done_beta) ? level.done_gen : 0;
        for (std::size_t k = k0; k < level.gens.size(); ++k) {
          const Permutation& s = data_.levels[li].gens[k];
          const Point gamma = s(beta);
          Permutation h = compose(compose(u_beta, s), transversal(li, gamma).inverse());
          if (!h.is_identity()) {
            auto [residue, dropout] = strip(h, li + 1);
            if (dropout < data_.levels.size() || !residue.is_identity()) {
              data_.levels[li].done_beta = b;
              data_.levels[li].done_gen = k;
              install(residue, li + 1, dropout);
              i = static_cast<std::ptrdiff_t>(dropout);
              restarted = true;
              break;
            }
          }
        }
      }
      if (!restarted) {
        data_.levels[li].done_beta = data_.levels[li].orbit.size();
        data_.levels[li].done_gen = 0;
        --i;
      }
    }
  }

  void random_schreier_sims(const std::vector<Permutation>& gens, std::uint64_t target) {
    if (target < data_.order) throw Error("known order smaller than a partial chain");
    std::vector<Permutation> nontrivial;
    for (const auto& g : gens) {
      if (!g.is_identity()) nontrivial.push_back(g);
    }
    if (nontrivial.empty()) {
      if (target != 1) throw Error("trivial generators but known order " + std::to_string(target));
      return;
    }
    // Product replacement with a fixed seed keeps the chain reproducible.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ data_.degree ^ (target << 7));
    std::vector<Permutation> state;
    while (state.size() < std::max<std::size_t>(10, nontrivial.size())) {
      for (const auto& g : nontrivial) state.push_back(g);
    }
    Permutation acc(data_.degree);
    auto next = [&]() {
      const std::size_t n = state.size();
      const std::size_t a = rng() % n;
      std::size_t b = rng() % (n - 1);
      if (b >= a) ++b;
      state[a] = (rng() & 1U) ? compose(state[a], state[b]) : compose(state[b], state[a]);
      acc = compose(acc, state[a]);
      return acc;
    };
    for (int warm = 0; warm < 50; ++warm) next();
    std::uint64_t stale = 0;
    while (data_.order < target) {
      auto [residue, dropout] = strip(next(), 0);
      if (dropout < data_.levels.size() || !residue.is_identity()) {
        install(residue, 0, dropout);
        stale = 0;
        if (data_.order > target) throw Error("known order too small for the generated group");
      } else if (++stale > 20000) {
        throw Error("could not reach known order " + std::to_string(target) + " (reached " +
                    std::to_string(data_.order) + ")");
      }
    }
  }

 private:
  ChainData data_;
};

void check_generators(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree == 0) throw InvalidInput("group degree must be positive");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidInput("generator degree " + std::to_string(g.degree()) +
                         " does not match group degree " + std::to_string(degree));
    }
  }
}

}  // namespace
}  // namespace detail

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> generators,
                                     const Limits& limits) {
  return with_base(degree, std::move(generators), {}, limits);
}

PermGroup PermGroup::with_base(std::size_t degree, std::vector<Permutation> generators,
                               std::vector<Point> base_prefix, const Limits& limits) {
  if (generators.empty()) throw InvalidInput("a group needs at least one generator");
  detail::check_generators(degree, generators);
  detail::ChainBuilder builder(degree, limits);
  builder.seed(generators, base_prefix);
  builder.schreier_sims();
  builder.data().gens = std::move(generators);
  return PermGroup(std::make_shared<const detail::ChainData>(std::move(builder.data())));
}

PermGroup PermGroup::with_known_order(std::size_t degree, std::vector<Permutation> generators,
                                      std::uint64_t known_order, const Limits& limits) {
  if (generators.empty()) throw InvalidInput("a group needs at least one generator");
  detail::check_generators(degree, generators);
  if (known_order > limits.order_cap) {
    throw CapExceeded("group order exceeds order cap " + std::to_string(limits.order_cap));
  }
  detail::ChainBuilder builder(degree, limits);
  builder.seed(generators, {});
  builder.random_schreier_sims(generators, known_order);
  builder.data().gens = std::move(generators);
  return PermGroup(std::make_shared<const detail::ChainData>(std::move(builder.data())));
}

PermGroup PermGroup::trivial(std::size_t degree, const Limits& limits) {
  return from_generators(degree, {Permutation(degree)}, limits);
}

std::size_t PermGroup::degree() const noexcept { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return data_->gens; }
std::uint64_t PermGroup::order() const noexcept { return data_->order; }
const Limits& PermGroup::limits() const noexcept { return data_->limits; }
std::size_t PermGroup::chain_length() const noexcept { return data_->levels.size(); }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : data_->levels) out.push_back(level.base);
  return out;
}

std::vector<std::uint64_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::uint64_t> out;
  for (const auto& level : data_->levels) out.push_back(level.orbit.size());
  return out;
}

std::span<const Point> PermGroup::basic_orbit(std::size_t level) const {
  return data_->levels.at(level).orbit;
}

Permutation PermGroup::transversal_element(std::size_t level, Point point) const {
  const auto& lvl = data_->levels.at(level);
  if (point >= data_->degree || lvl.pos[point] < 0) {
    throw InvalidInput("point not in basic orbit");
  }
  if (!lvl.inv_trans.empty()) return lvl.inv_trans[static_cast<std::size_t>(lvl.pos[point])].inverse();
  std::vector<std::size_t> path;
  while (point != lvl.base) {
    const auto k = static_cast<std::size_t>(lvl.via[point]);
    path.push_back(k);
    point = lvl.gens_inv[k](point);
  }
  Permutation u(data_->degree);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = compose(u, lvl.gens[*it]);
  return u;
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& p) const {
  if (p.degree() != data_->degree) throw InvalidInput("degree mismatch in sift");
  std::vector<Point> h(p.images().begin(), p.images().end());
  std::size_t l = 0;
  for (; l < data_->levels.size(); ++l) {
    const auto& level = data_->levels[l];
    Point beta = h[level.base];
    const std::int32_t pos = level.pos[beta];
    if (pos < 0) break;
    if (!level.inv_trans.empty()) {
      detail::in_place_compose(h, level.inv_trans[static_cast<std::size_t>(pos)]);
    } else {
      while (beta != level.base) {
        const auto k = static_cast<std::size_t>(level.via[beta]);
        detail::in_place_compose(h, level.gens_inv[k]);
        beta = level.gens_inv[k](beta);
      }
    }
  }
  return {Permutation::from_images(std::move(h)), l};
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != data_->degree) throw InvalidInput("degree mismatch in membership test");
  auto [residue, level] = sift(p);
  return level == data_->levels.size() && residue.is_identity();
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree()) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& visit,
                                 std::uint64_t cap) const {
  if (order() > cap) {
    throw CapExceeded("element enumeration refused: order " + std::to_string(order()) +
                      " exceeds cap " + std::to_string(cap));
  }
  const auto& levels = data_->levels;
  std::vector<std::vector<Permutation>> trans(levels.size());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (Point beta : levels[l].orbit) trans[l].push_back(transversal_element(l, beta));
  }
  if (levels.empty()) {
    visit(Permutation(data_->degree));
    return;
  }
  // element = t[k-1] * ... * t[0]
  bool stop = false;
  std::function<void(std::ptrdiff_t, const Permutation&)> rec =
      [&](std::ptrdiff_t l, const Permutation& acc) {
        for (const auto& t : trans[static_cast<std::size_t>(l)]) {
          if (stop) return;
          Permutation next = compose(acc, t);
          if (l == 0) {
            if (!visit(next)) stop = true;
          } else {
            rec(l - 1, next);
          }
        }
      };
  rec(static_cast<std::ptrdiff_t>(levels.size()) - 1, Permutation(data_->degree));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  if (order() <= cap) out.reserve(order());
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  }, cap);
  return out;
}

std::vector<Permutation> PermGroup::nontrivial_generators() const {
  std::vector<Permutation> out;
  std::unordered_set<Permutation> seen;
  for (const auto& g : data_->gens) {
    if (g.is_identity() || !seen.insert(g).second) continue;
    out.push_back(g);
  }
  return out;
}

PermGroup generate(std::size_t degree, std::vector<Permutation> generators,
                   const Limits& limits) {
  if (generators.empty()) generators.emplace_back(degree);
  return PermGroup::from_generators(degree, std::move(generators), limits);
}

}  // namespace rcg

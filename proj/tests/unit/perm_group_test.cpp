#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "rcg/errors.hpp"
#include "rcg/perm_group.hpp"
#include "rcg/zoo.hpp"

using rcg::Permutation;
using rcg::PermGroup;

TEST_CASE("order from generators") {
  const auto s4 = PermGroup::from_generators(
      4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);
  CHECK(PermGroup::from_generators(3, {Permutation::from_cycles(3, {{0, 1, 2}})}).order() == 3);
  CHECK(PermGroup::from_generators(5, {Permutation(5)}).order() == 1);
  CHECK(rcg::alternating_group(5).order() == 60);
}

TEST_CASE("membership") {
  const auto a4 = rcg::alternating_group(4);
  CHECK_FALSE(a4.contains(Permutation::from_cycles(4, {{0, 1}})));
  CHECK(a4.contains(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
  CHECK(a4.contains(Permutation::from_cycles(4, {{1, 2, 3}})));
  for (const auto& g : a4.generators()) CHECK(a4.contains(g));
  CHECK_THROWS_AS(a4.contains(Permutation(5)), rcg::InvalidInput);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(PermGroup::from_generators(3, {}), rcg::InvalidInput);
  CHECK_THROWS_AS(PermGroup::from_generators(3, {Permutation(4)}), rcg::InvalidInput);
  CHECK_THROWS_AS(rcg::symmetric_group(12), rcg::CapExceeded);
  rcg::Limits small;
  small.order_cap = 100;
  CHECK_THROWS_AS(rcg::symmetric_group(5, small), rcg::CapExceeded);
  CHECK(rcg::symmetric_group(4, small).order() == 24);
}

TEST_CASE("order is the product of the basic orbit sizes") {
  for (const auto& spec : rcg::default_corpus()) {
    const PermGroup g = rcg::build(spec);
    std::uint64_t product = 1;
    for (auto s : g.basic_orbit_sizes()) product *= s;
    CHECK_MESSAGE(product == g.order(), spec.name);
  }
}

TEST_CASE("bounded element enumeration") {
  CHECK(rcg::symmetric_group(3).elements(10).size() == 6);
  CHECK_THROWS_AS(rcg::symmetric_group(4).elements(10), rcg::CapExceeded);
  const auto c5 = rcg::cyclic_group(5);
  const auto x = c5.generators().front();
  std::set<Permutation> expected;
  for (int k = 0; k < 5; ++k) expected.insert(x.power(k));
  const auto got = c5.elements(100);
  CHECK(std::set<Permutation>(got.begin(), got.end()) == expected);
  CHECK(got.size() == 5);
}

TEST_CASE("enumeration yields each element once") {
  const auto g = rcg::psl2(7);
  const auto els = g.elements(1000);
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == 168);
  for (const auto& e : els) CHECK(g.contains(e));
}

TEST_CASE("chain construction is deterministic") {
  const auto spec = rcg::parse_spec_string("psl2:11");
  const PermGroup a = rcg::build(spec), b = rcg::build(spec);
  CHECK(a.base() == b.base());
  CHECK(a.basic_orbit_sizes() == b.basic_orbit_sizes());
  CHECK(a.elements(1000) == b.elements(1000));
}

TEST_CASE("base points are the smallest moved points") {
  const auto g = PermGroup::from_generators(6, {Permutation::from_cycles(6, {{2, 3, 4}})});
  CHECK(g.base() == std::vector<rcg::Point>{2});
}

TEST_CASE("known-order and prescribed-base chains agree with the default chain") {
  const auto g = rcg::symmetric_group(6);
  const auto k = PermGroup::with_known_order(6, g.generators(), 720);
  const auto b = PermGroup::with_base(6, g.generators(), {0, 1, 2, 3, 4, 5});
  CHECK(k.order() == 720);
  CHECK(b.order() == 720);
  CHECK(b.base().front() == 0);
  CHECK(k.same_group(g));
  CHECK(b.same_group(g));
}

TEST_CASE("membership agrees with exhaustive closure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<rcg::Point> im(n);
      std::iota(im.begin(), im.end(), rcg::Point{0});
      std::shuffle(im.begin(), im.end(), rng);
      // Keep some trials small by fixing points.
      if (trial % 3 == 0) std::sort(im.begin() + 3, im.end());
      gens.push_back(Permutation::from_images(im));
    }
    const PermGroup g = PermGroup::from_generators(n, gens);
    const oracle::Group o(n, gens);
    CHECK(g.order() == o.order());
    oracle::Group sym(n, {Permutation::from_cycles(n, {{0, 1}}),
                          Permutation::from_cycles(n, {{0, 1, 2, 3, 4, 5}})});
    for (const auto& x : sym.elements) CHECK(g.contains(x) == o.contains(x));
  }
}

TEST_CASE("corpus orders agree with exhaustive closure up to 10^5") {
  for (const auto& spec : rcg::default_corpus()) {
    const PermGroup g = rcg::build(spec);
    if (g.order() > 100'000) continue;
    CHECK_MESSAGE(oracle::closure(g.degree(), g.generators()).size() == g.order(), spec.name);
  }
}

TEST_CASE("generate accepts an empty generator list") {
  CHECK(rcg::generate(4, {}).order() == 1);
}

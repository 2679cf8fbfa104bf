#include <algorithm>

#include "doctest.h"
#include "rcg/classes.hpp"
#include "rcg/errors.hpp"
#include "rcg/zoo.hpp"

using rcg::Permutation;

namespace {

std::vector<std::uint64_t> sizes(const std::vector<rcg::ConjClass>& cls) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cls) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation element_of_order(const rcg::PermGroup& g, std::uint64_t order) {
  for (const auto& c : rcg::conjugacy_classes(g)) {
    if (c.element_order == order) return c.representative;
  }
  FAIL("no element of order " << order);
  return Permutation(g.degree());
}

}  // namespace

TEST_CASE("class sizes of five-cycles in alternating groups") {
  const auto a5 = rcg::alternating_group(5);
  CHECK(rcg::class_of(a5, Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})).size == 12);
  const auto a6 = rcg::alternating_group(6);
  CHECK(rcg::class_of(a6, Permutation::from_cycles(6, {{0, 1, 2, 3, 4}})).size == 72);
  const auto a7 = rcg::alternating_group(7);
  const auto c = rcg::class_of(a7, Permutation::from_cycles(7, {{0, 1, 2, 3, 4}}));
  CHECK(c.size == 504);
  CHECK(c.size == 7 * 6 * 5 * 4 * 3 / 5);
}

TEST_CASE("identity class") {
  const auto g = rcg::symmetric_group(5);
  const auto c = rcg::class_of(g, Permutation(5));
  CHECK(c.size == 1);
  CHECK(c.is_real);
  CHECK(c.element_order == 1);
}

TEST_CASE("class_of errors") {
  const auto a4 = rcg::alternating_group(4);
  CHECK_THROWS_AS(rcg::class_of(a4, Permutation::from_cycles(4, {{0, 1}})), rcg::InvalidInput);
  rcg::Limits tight;
  tight.class_cap = 10;
  const auto s5 = rcg::symmetric_group(5, tight);
  CHECK_THROWS_AS(rcg::class_of(s5, Permutation::from_cycles(5, {{0, 1, 2}})), rcg::CapExceeded);
}

TEST_CASE("class partitions") {
  CHECK(sizes(rcg::conjugacy_classes(rcg::symmetric_group(4))) ==
        std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(sizes(rcg::conjugacy_classes(rcg::psl2(7))) ==
        std::vector<std::uint64_t>{1, 21, 24, 24, 42, 56});
  CHECK(sizes(rcg::conjugacy_classes(rcg::cyclic_group(3))) ==
        std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("class sizes sum to the group order and divide it") {
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    std::uint64_t total = 0;
    for (const auto& c : rcg::conjugacy_classes(g)) {
      total += c.size;
      CHECK(g.order() % c.size == 0);
    }
    CHECK_MESSAGE(total == g.order(), spec.name);
  }
}

TEST_CASE("class list ordering and representatives") {
  const auto g = rcg::symmetric_group(5);
  const auto cls = rcg::conjugacy_classes(g);
  for (std::size_t i = 1; i < cls.size(); ++i) {
    const auto& a = cls[i - 1];
    const auto& b = cls[i];
    CHECK(std::tie(a.element_order, a.size) <= std::tie(b.element_order, b.size));
  }
  CHECK(cls.front().representative.is_identity());
  const auto again = rcg::conjugacy_classes(g);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    CHECK(cls[i].representative == again[i].representative);
  }
}

TEST_CASE("classify indexes every element") {
  const auto g = rcg::dihedral_group(5);
  const auto part = rcg::classify(g);
  CHECK(part.index_of.size() == 10);
  for (const auto& x : g.elements(10)) {
    CHECK(rcg::class_of(g, x).size == part.class_containing(x).size);
  }
}

TEST_CASE("centralizer orders") {
  const auto psl13 = rcg::psl2(13);
  bool seen = false;
  for (const auto& c : rcg::conjugacy_classes(psl13)) {
    if (c.element_order == 7 && c.is_real) {
      CHECK(rcg::centralizer_order(psl13, c.representative) == 7);
      CHECK(c.size == 156);
      seen = true;
    }
  }
  CHECK(seen);
  const auto s4 = rcg::symmetric_group(4);
  CHECK(rcg::centralizer_order(s4, Permutation(4)) == 24);
  CHECK(rcg::centralizer_order(s4, Permutation::from_cycles(4, {{0, 1, 2}})) == 3);
  CHECK(rcg::centralizer(s4, Permutation::from_cycles(4, {{0, 1, 2}})).order() == 3);
  CHECK(rcg::centralizer(s4, Permutation::from_cycles(4, {{0, 1}})).order() == 4);
}

TEST_CASE("realness with witnesses") {
  const auto a5 = rcg::alternating_group(5);
  const auto x = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const auto r = rcg::is_real(a5, x);
  CHECK(r.real);
  REQUIRE(r.witness);
  CHECK(rcg::conjugate(x, *r.witness) == x.inverse());
  CHECK(a5.contains(*r.witness));
  const auto g = Permutation::from_cycles(5, {{1, 4}, {2, 3}});
  CHECK(a5.contains(g));
  CHECK(rcg::conjugate(x, g) == x.inverse());

  const auto psl7 = rcg::psl2(7);
  CHECK_FALSE(rcg::is_real(psl7, element_of_order(psl7, 7)).real);

  const auto t = Permutation::from_cycles(5, {{0, 1}, {2, 3}});
  const auto inv = rcg::is_real(a5, t);
  CHECK(inv.real);
  REQUIRE(inv.witness);
  CHECK(inv.witness->is_identity());
}

TEST_CASE("reversing witnesses are valid across the corpus") {
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    if (g.order() > 10'000) continue;
    for (const auto& c : rcg::conjugacy_classes(g)) {
      CHECK(c.is_real == c.reversing_witness.has_value());
      if (!c.reversing_witness) continue;
      CHECK(g.contains(*c.reversing_witness));
      CHECK(rcg::conjugate(c.representative, *c.reversing_witness) == c.representative.inverse());
      if (c.size % 2 == 1) CHECK(rcg::compose(c.representative, c.representative).is_identity());
    }
  }
}

TEST_CASE("generalized centralizer") {
  const auto s3 = rcg::symmetric_group(3);
  CHECK(rcg::generalized_centralizer(s3, Permutation::from_cycles(3, {{0, 1, 2}})).order() == 6);
  CHECK(rcg::generalized_centralizer(s3, Permutation(3)).order() == 6);
  const auto a5 = rcg::alternating_group(5);
  CHECK(rcg::generalized_centralizer(a5, Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})).order() ==
        10);
  const auto psl7 = rcg::psl2(7);
  CHECK_THROWS_AS(rcg::generalized_centralizer(psl7, element_of_order(psl7, 7)), rcg::InvalidInput);
}

TEST_CASE("p-parts of integers") {
  CHECK(rcg::p_part(56, 2) == 8);
  CHECK(rcg::p_part(1, 3) == 1);
  CHECK(rcg::p_part(156, 2) == 4);
  CHECK(rcg::p_part(156, 3) == 3);
  CHECK(rcg::p_part(625, 5) == 625);
}

TEST_CASE("p-parts of elements") {
  const auto x = Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}});
  CHECK(rcg::element_p_part(x, 3) == Permutation::from_cycles(5, {{2, 3, 4}}));
  CHECK(rcg::element_p_part(x, 2) == Permutation::from_cycles(5, {{0, 1}}));
  CHECK(rcg::element_p_part(Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), 3).is_identity());
  const auto six = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  CHECK(rcg::element_p_part(six, 2) == Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}}));
  const auto y = Permutation::from_cycles(12, {{0, 1, 2, 3}, {4, 5, 6}, {7, 8, 9, 10, 11}});
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto xp = rcg::element_p_part(y, p);
    CHECK(xp.order() == rcg::p_part(y.order(), p));
    CHECK(rcg::commute(xp, y));
  }
  const auto prod = rcg::compose(rcg::element_p_part(y, 2),
                                 rcg::compose(rcg::element_p_part(y, 3),
                                              rcg::element_p_part(y, 5)));
  CHECK(prod == y);
}

TEST_CASE("integer helpers") {
  CHECK(rcg::is_prime(2));
  CHECK(rcg::is_prime(97));
  CHECK_FALSE(rcg::is_prime(1));
  CHECK_FALSE(rcg::is_prime(91));
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(rcg::factorize(4095) == F{{3, 2}, {5, 1}, {7, 1}, {13, 1}});
  CHECK(rcg::factorize(1).empty());
  CHECK(rcg::prime_of_prime_power(81) == 3);
  CHECK_FALSE(rcg::prime_of_prime_power(12));
  CHECK_FALSE(rcg::prime_of_prime_power(1));
  CHECK(rcg::is_power_of(1, 2));
  CHECK(rcg::is_power_of(64, 2));
  CHECK_FALSE(rcg::is_power_of(48, 2));
}

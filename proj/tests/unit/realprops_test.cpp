#include "doctest.h"
#include "rcg/errors.hpp"
#include "rcg/realprops.hpp"
#include "rcg/structure.hpp"
#include "rcg/zoo.hpp"

namespace {

bool has_class(const std::vector<rcg::ConjClass>& cls, std::uint64_t order, std::uint64_t size) {
  return std::any_of(cls.begin(), cls.end(), [&](const rcg::ConjClass& c) {
    return c.element_order == order && c.size == size;
  });
}

// Independent primitivity test: ell divides q^n - 1 but no q^m - 1 with m < n.
bool primitive(std::uint64_t ell, std::uint64_t q, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    r = r * (q % ell) % ell;
    if (r == 1 % ell) return m == n;
  }
  return false;
}

unsigned __int128 gl_order(std::uint64_t n, std::uint64_t q) {
  unsigned __int128 r = 1, qn = 1;
  for (std::uint64_t i = 0; i < n; ++i) qn *= q;
  unsigned __int128 qi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

}  // namespace

TEST_CASE("odd prime power orders include 1") {
  CHECK(rcg::is_odd_prime_power_order(1));
  CHECK(rcg::is_odd_prime_power_order(27));
  CHECK_FALSE(rcg::is_odd_prime_power_order(2));
  CHECK_FALSE(rcg::is_odd_prime_power_order(15));
}

TEST_CASE("real spectrum of Sym(4)") {
  const auto s = rcg::real_spectrum(rcg::symmetric_group(4), "Sym(4)");
  CHECK(s.group_id == "Sym(4)");
  CHECK(s.entries.size() == 5);
  CHECK(s.odd_ppo_sizes() == std::vector<std::uint64_t>{1, 8});
  CHECK(s.sizes() == std::vector<std::uint64_t>{1, 3, 6, 8});
}

TEST_CASE("property T") {
  const auto s4 = rcg::has_property_T(rcg::symmetric_group(4));
  CHECK_FALSE(s4.holds);
  REQUIRE(s4.violator);
  CHECK(s4.violator->size == 8);
  CHECK(rcg::has_property_T(rcg::symmetric_group(3)).holds);
  CHECK(rcg::has_property_T(rcg::affine_group(7, 3)).holds);
  CHECK(rcg::has_property_T(rcg::affine_group(31, 5)).holds);
}

TEST_CASE("property WT") {
  CHECK(rcg::has_property_WT(rcg::symmetric_group(4)).holds);
  const auto a5 = rcg::has_property_WT(rcg::alternating_group(5));
  CHECK_FALSE(a5.holds);
  REQUIRE(a5.violator);
  CHECK(a5.violator->size == 20);
  CHECK(a5.violator->element_order == 3);
}

TEST_CASE("T implies WT across the corpus") {
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    const auto s = rcg::real_spectrum(g);
    if (rcg::has_property_T(s).holds) CHECK_MESSAGE(rcg::has_property_WT(s).holds, spec.name);
  }
}

TEST_CASE("odd-order groups have only the identity as a real element") {
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    const auto s = rcg::real_spectrum(g);
    CHECK_MESSAGE((g.order() % 2 == 1) == (s.entries.size() == 1), spec.name);
  }
}

TEST_CASE("good elements") {
  const auto a5 = rcg::good_elements(rcg::alternating_group(5));
  CHECK(has_class(a5, 5, 12));
  const auto psl13 = rcg::good_elements(rcg::psl2(13));
  CHECK(has_class(psl13, 7, 156));
  CHECK(rcg::good_elements(rcg::symmetric_group(3)).empty());
  for (const auto& c : a5) {
    CHECK(c.is_real);
    CHECK(c.size % 4 == 0);
    CHECK(c.element_order > 1);
  }
}

TEST_CASE("good elements respect the center clause") {
  // In SL2(5) the center has order 2, so odd-order classes still qualify.
  const auto g = rcg::sl2(5);
  const auto cls = rcg::conjugacy_classes(g);
  CHECK(rcg::good_elements(cls, 2).size() == rcg::good_elements(cls, 1).size());
  CHECK(rcg::good_elements(cls, 15).empty());
}

TEST_CASE("conjC scanner") {
  const auto s3 = rcg::symmetric_group(3);
  CHECK_FALSE(rcg::conjecture_c_hypothesis(s3));
  CHECK(rcg::conjecture_c_check(s3) == rcg::ConjectureVerdict::Vacuous);
  const auto a4 = rcg::alternating_group(4);
  CHECK(rcg::conjecture_c_hypothesis(a4));
  CHECK(rcg::conjecture_c_check(a4) == rcg::ConjectureVerdict::Confirmed);
  CHECK(rcg::conjecture_c_check(rcg::cyclic_group(12)) == rcg::ConjectureVerdict::Confirmed);
  CHECK(rcg::to_string(rcg::ConjectureVerdict::Counterexample) == "COUNTEREXAMPLE");
}

TEST_CASE("navarro scanner hypothesis") {
  CHECK(rcg::navarro_hypothesis(rcg::cyclic_group(9)));
  CHECK_FALSE(rcg::navarro_hypothesis(rcg::symmetric_group(3)));
  CHECK(rcg::navarro_hypothesis(rcg::build(rcg::quaternion8_spec())));
}

TEST_CASE("zsigmondy primes") {
  CHECK_FALSE(rcg::zsigmondy_l(2, 6).has_value());
  CHECK(rcg::zsigmondy_l(2, 4) == 5);
  CHECK(rcg::zsigmondy_l(2, 12) == 13);
  CHECK(rcg::zsigmondy_l(3, 3) == 13);
  CHECK_THROWS_AS(rcg::zsigmondy_l(1, 5), rcg::InvalidInput);
  CHECK_THROWS_AS(rcg::zsigmondy_l(2, 2), rcg::InvalidInput);
}

TEST_CASE("zsigmondy primes are primitive, smallest, and 1 mod n") {
  for (std::uint64_t q = 2; q <= 10; ++q) {
    for (std::uint64_t n = 3; n <= 12; ++n) {
      const auto l = rcg::zsigmondy_l(q, n);
      std::uint64_t qn = 1;
      for (std::uint64_t i = 0; i < n; ++i) qn *= q;
      std::optional<std::uint64_t> smallest;
      for (const auto& [p, e] : rcg::factorize(qn - 1)) {
        if (primitive(p, q, n)) {
          smallest = p;
          break;
        }
      }
      CHECK_MESSAGE(l == smallest, "q=" << q << " n=" << n);
      if (q == 2 && n == 6) {
        CHECK_FALSE(l);
      } else {
        REQUIRE(l);
        CHECK(*l % n == 1);
      }
    }
  }
}

TEST_CASE("decomposition counts") {
  CHECK(rcg::decomposition_count_t(3, 2) == 28);
  CHECK(rcg::decomposition_count_t(4, 2) == 560);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (std::uint64_t n = 3; n <= 6; ++n) {
      if (n >= 6 && q > 5) continue;
      const auto t = rcg::decomposition_count_t(n, q);
      const auto expect = gl_order(n, q) / (gl_order(2, q) * gl_order(n - 2, q));
      CHECK(t == static_cast<std::uint64_t>(expect));
      if (q % 2 == 0) CHECK(t % 4 == 0);
    }
  }
  CHECK_THROWS_AS(rcg::decomposition_count_t(2, 2), rcg::InvalidInput);
  CHECK_THROWS_AS(rcg::decomposition_count_t(3, 6), rcg::InvalidInput);
}

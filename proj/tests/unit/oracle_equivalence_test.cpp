#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "compare.hpp"
#include "doctest.h"
#include "rcg/perm_group.hpp"
#include "rcg/zoo.hpp"

namespace {

void require_match(const rcg::PermGroup& g, const std::string& label) {
  const auto cmp = oracle::compare_with_oracle(g);
  std::ostringstream os;
  for (const auto& m : cmp.mismatches) os << m << "; ";
  CHECK_MESSAGE(cmp.mismatches.empty(), label << ": " << os.str());
  CHECK(cmp.checks > 0);
}

}  // namespace

TEST_CASE("small corpus groups agree with exhaustive computation") {
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    if (g.order() > 1000) continue;
    require_match(g, spec.name);
  }
}

TEST_CASE("random subgroups of Sym(6) agree with exhaustive computation") {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<rcg::Point> img(6);
    std::vector<rcg::Permutation> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      // Restrict some generators to a few points to get varied subgroups.
      if (i == 1) std::sort(img.begin() + 3, img.end());
      gens.push_back(rcg::Permutation::from_images(img));
    }
    const auto g = rcg::PermGroup::from_generators(6, gens);
    require_match(g, "trial " + std::to_string(trial));
  }
}

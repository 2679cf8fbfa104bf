#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "oracle.hpp"
#include "rcg/classes.hpp"
#include "rcg/structure.hpp"

namespace oracle {

struct Comparison {
  std::uint64_t checks = 0;
  std::vector<std::string> mismatches;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) mismatches.push_back(what);
  }
};

inline Sorted sorted_elements(const rcg::PermGroup& g) {
  Sorted v = g.elements(g.order());
  std::sort(v.begin(), v.end());
  return v;
}

// Compares every structural quantity the library reports against the
// exhaustive computations above.
inline Comparison compare_with_oracle(const rcg::PermGroup& g) {
  Comparison out;
  const Group o(g.degree(), g.generators());
  out.expect(o.order() == g.order(), "order");
  out.expect(sorted_elements(g) == o.elements, "element enumeration");

  const auto ocls = o.classes();
  std::unordered_map<Permutation, std::size_t> where;
  for (std::size_t i = 0; i < ocls.size(); ++i) {
    for (const auto& x : ocls[i].elements) where[x] = i;
  }
  const auto cls = rcg::conjugacy_classes(g);
  out.expect(cls.size() == ocls.size(), "class count");
  std::vector<bool> hit(ocls.size(), false);
  for (const auto& c : cls) {
    const std::string rep = c.representative.to_cycle_string();
    const auto it = where.find(c.representative);
    if (it == where.end()) {
      out.expect(false, "representative " + rep + " not in group");
      continue;
    }
    const OracleClass& oc = ocls[it->second];
    out.expect(!hit[it->second], "class of " + rep + " listed twice");
    hit[it->second] = true;
    out.expect(c.size == oc.elements.size(), "size of class " + rep);
    out.expect(c.is_real == oc.real, "realness of class " + rep);
    out.expect(c.centralizer_order(g.order()) == oc.centralizer, "centralizer of " + rep);
    out.expect(rcg::centralizer_order(g, c.representative) == oc.centralizer,
               "centralizer_order of " + rep);
    if (c.is_real && c.reversing_witness) {
      const Permutation& w = *c.reversing_witness;
      out.expect(o.contains(w) && rcg::conjugate(c.representative, w) == c.representative.inverse(),
                 "reversing witness of " + rep);
    }
  }

  const auto lattice = o.normal_subgroups();
  const auto normals = rcg::normal_subgroups(g, cls);
  std::vector<Sorted> mine;
  for (const auto& n : normals) mine.push_back(sorted_elements(n.group));
  std::sort(mine.begin(), mine.end(), [](const Sorted& a, const Sorted& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.expect(mine == lattice, "normal subgroup lattice (" + std::to_string(mine.size()) + " vs " +
                                  std::to_string(lattice.size()) + ")");

  out.expect(sorted_elements(rcg::center(g, cls).group) == o.center(), "center");
  out.expect(sorted_elements(rcg::derived_subgroup(g).group) == o.derived_subgroup(),
             "derived subgroup");
  const Cores oc = cores(o, lattice);
  out.expect(sorted_elements(rcg::o_p(g, 2, cls).group) == oc.o2, "O_2");
  out.expect(sorted_elements(rcg::o_p_prime(g, 2, cls).group) == oc.o2prime, "O_{2'}");
  out.expect(sorted_elements(rcg::o_upper_p_prime(g, 2, cls).group) == oc.o_upper, "O^{2'}");
  out.expect(rcg::is_solvable(g) == o.solvable(), "solvability");
  return out;
}

}  // namespace oracle

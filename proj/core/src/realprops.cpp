#include "rcg/realprops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rcg/errors.hpp"
#include "rcg/structure.hpp"

namespace rcg {

namespace {

using u128 = unsigned __int128;

u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > (~static_cast<u128>(0)) / a) throw InvalidInput("arithmetic overflow");
  return a * b;
}

u128 ipow(std::uint64_t base, std::uint64_t e) {
  u128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

bool divisible_by_4(std::uint64_t n) { return n % 4 == 0; }

}  // namespace

bool is_odd_prime_power_order(std::uint64_t order) {
  if (order == 1) return true;
  const auto p = prime_of_prime_power(order);
  return p && *p != 2;
}

std::vector<std::uint64_t> RealSpectrum::odd_ppo_sizes() const {
  std::set<std::uint64_t> s;
  for (std::size_t i : odd_ppo_subset) s.insert(entries[i].cls.size);
  return {s.begin(), s.end()};
}

std::vector<std::uint64_t> RealSpectrum::sizes() const {
  std::set<std::uint64_t> s;
  for (const auto& e : entries) s.insert(e.cls.size);
  return {s.begin(), s.end()};
}

RealSpectrum real_spectrum(const std::vector<ConjClass>& classes, std::string group_id) {
  RealSpectrum spec;
  spec.group_id = std::move(group_id);
  for (const auto& c : classes) {
    if (!c.is_real) continue;
    RealEntry e;
    e.cls = c;
    e.is_central = c.size == 1;
    e.size_2part = p_part(c.size, 2);
    e.odd_prime_power_order = is_odd_prime_power_order(c.element_order);
    if (e.odd_prime_power_order) spec.odd_ppo_subset.push_back(spec.entries.size());
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

RealSpectrum real_spectrum(const PermGroup& group, std::string group_id) {
  return real_spectrum(conjugacy_classes(group), std::move(group_id));
}

PropertyVerdict has_property_T(const RealSpectrum& spectrum) {
  for (std::size_t i : spectrum.odd_ppo_subset) {
    const auto& c = spectrum.entries[i].cls;
    if (divisible_by_4(c.size)) return {false, c};
  }
  return {};
}

PropertyVerdict has_property_T(const PermGroup& group) {
  return has_property_T(real_spectrum(group));
}

PropertyVerdict has_property_WT(const RealSpectrum& spectrum) {
  for (std::size_t i : spectrum.odd_ppo_subset) {
    const auto& c = spectrum.entries[i].cls;
    if (divisible_by_4(c.size) && !is_power_of(c.size, 2)) return {false, c};
  }
  return {};
}

PropertyVerdict has_property_WT(const PermGroup& group) {
  return has_property_WT(real_spectrum(group));
}

std::vector<ConjClass> good_elements(const std::vector<ConjClass>& classes,
                                     std::uint64_t center_order) {
  std::vector<ConjClass> out;
  for (const auto& c : classes) {
    if (!c.is_real || c.element_order == 1) continue;
    if (!is_odd_prime_power_order(c.element_order)) continue;
    if (!divisible_by_4(c.size)) continue;
    if (std::gcd(c.element_order, center_order) != 1) continue;
    out.push_back(c);
  }
  return out;
}

std::vector<ConjClass> good_elements(const PermGroup& group) {
  const auto classes = conjugacy_classes(group);
  return good_elements(classes, center(group, classes).order());
}

std::string to_string(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::Confirmed: return "CONFIRMED";
    case ConjectureVerdict::Counterexample: return "COUNTEREXAMPLE";
    case ConjectureVerdict::Vacuous: return "VACUOUS";
  }
  return "?";
}

bool conjecture_c_hypothesis(const RealSpectrum& spectrum) {
  std::optional<std::uint64_t> part;
  for (const auto& e : spectrum.entries) {
    if (e.is_central) continue;
    if (!part) part = e.size_2part;
    else if (*part != e.size_2part) return false;
  }
  return true;
}

bool conjecture_c_hypothesis(const PermGroup& group) {
  return conjecture_c_hypothesis(real_spectrum(group));
}

ConjectureVerdict conjecture_c_check(const PermGroup& group) {
  const auto classes = conjugacy_classes(group);
  if (!conjecture_c_hypothesis(real_spectrum(classes))) return ConjectureVerdict::Vacuous;
  const Subgroup h = o_upper_p_prime(group, 2, classes);
  return is_p_nilpotent(h.group, 2) ? ConjectureVerdict::Confirmed
                                    : ConjectureVerdict::Counterexample;
}

bool navarro_hypothesis(const RealSpectrum& spectrum, std::uint64_t group_order) {
  std::optional<std::uint64_t> cen;
  for (const auto& e : spectrum.entries) {
    if (e.is_central) continue;
    const std::uint64_t c = e.cls.centralizer_order(group_order);
    if (!cen) cen = c;
    else if (*cen != c) return false;
  }
  return true;
}

bool navarro_hypothesis(const PermGroup& group) {
  return navarro_hypothesis(real_spectrum(group), group.order());
}

std::optional<std::uint64_t> zsigmondy_l(std::uint64_t q, std::uint64_t n) {
  if (q < 2 || n < 3) throw InvalidInput("zsigmondy_l needs q >= 2 and n >= 3");
  const u128 qn = ipow(q, n);
  if (qn - 1 >= (static_cast<u128>(1) << 63)) throw InvalidInput("q^n - 1 exceeds 63 bits");
  const auto value = static_cast<std::uint64_t>(qn - 1);
  for (const auto& [ell, mult] : factorize(value)) {
    // ell is primitive iff the multiplicative order of q mod ell is n.
    bool primitive = true;
    u128 r = 1;
    for (std::uint64_t m = 1; m < n; ++m) {
      r = (r * (q % ell)) % ell;
      if (r == 1 % ell) {
        primitive = false;
        break;
      }
    }
    if (primitive) return ell;
  }
  return std::nullopt;
}

std::uint64_t decomposition_count_t(std::uint64_t n, std::uint64_t q) {
  if (n < 3) throw InvalidInput("decomposition_count_t needs n >= 3");
  if (!prime_of_prime_power(q)) throw InvalidInput("decomposition_count_t needs a prime power q");
  const u128 numerator = checked_mul(checked_mul(ipow(q, 2 * (n - 2)), ipow(q, n) - 1),
                                     ipow(q, n - 1) - 1);
  const u128 denominator = checked_mul(q - 1, ipow(q, 2) - 1);
  if (numerator % denominator != 0) throw InvalidInput("decomposition count is not an integer");
  const u128 t = numerator / denominator;
  if (t > static_cast<u128>(~std::uint64_t{0})) throw InvalidInput("decomposition count overflow");
  return static_cast<std::uint64_t>(t);
}

}  // namespace rcg

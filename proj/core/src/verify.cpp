#include "rcg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rcg/classes.hpp"
#include "rcg/errors.hpp"
#include "rcg/realprops.hpp"
#include "rcg/structure.hpp"

namespace rcg {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kLemmaOrderBound = 10'000;

ClassSummary summarize(const ConjClass& c) {
  return {c.representative.to_cycle_string(true), c.element_order, c.size, c.is_real};
}

json to_json(const ClassSummary& c) {
  return {{"representative", c.representative},
          {"element_order", c.element_order},
          {"size", c.size},
          {"real", c.is_real}};
}

json group_json(const PermGroup& g) { return json::parse(group_to_json(g)); }

std::string factorization_text(std::uint64_t n) {
  if (n == 1) return "1";
  std::string out;
  for (const auto& [p, e] : factorize(n)) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool divides(std::uint64_t a, std::uint64_t b) { return a != 0 && b % a == 0; }

// Accumulates assertions per check id and remembers the first failure.
class Checks {
 public:
  void expect(const std::string& id, bool ok, const std::function<json()>& detail = {}) {
    CheckTally& t = tally(id);
    ++t.assertions;
    if (!ok) {
      ++t.failures;
      if (!first_failure_) {
        first_failure_ = json{{"check", id}};
        if (detail) (*first_failure_)["detail"] = detail();
      }
    }
  }
  void skip(const std::string& id) { ++tally(id).skipped; }

  std::uint64_t assertions() const {
    std::uint64_t n = 0;
    for (const auto& t : tallies_) n += t.assertions;
    return n;
  }
  bool failed() const { return first_failure_.has_value(); }
  const std::optional<json>& first_failure() const { return first_failure_; }
  const std::vector<CheckTally>& tallies() const { return tallies_; }

 private:
  CheckTally& tally(const std::string& id) {
    for (auto& t : tallies_) {
      if (t.id == id) return t;
    }
    tallies_.push_back({id});
    return tallies_.back();
  }
  std::vector<CheckTally> tallies_;
  std::optional<json> first_failure_;
};

// Structural data shared by every suite of one group.
struct Context {
  const PermGroup& g;
  std::string name;
  std::vector<ConjClass> classes;
  std::optional<ClassPartition> partition;
  RealSpectrum spectrum;
  Subgroup center;
  Subgroup o2;
  Subgroup o2prime;
  Subgroup o_upper;
  bool solvable = false;
  PropertyVerdict T;
  PropertyVerdict WT;
  std::optional<std::vector<Subgroup>> normals;

  const std::vector<Subgroup>& normal_list() {
    if (!normals) normals = normal_subgroups(g, classes);
    return *normals;
  }
  const ConjClass& class_of_element(const Permutation& x) const {
    return partition->class_containing(x);
  }
};

std::string witness_text(const Context& ctx, const std::string& suite, const json& detail) {
  json w;
  w["schema_version"] = kReportSchemaVersion;
  w["kind"] = "rcg-witness";
  w["name"] = ctx.name;
  w["suite"] = suite;
  w["group"] = group_json(ctx.g);
  w["finding"] = detail;
  return w.dump(2);
}

SuiteResult finish(const Context& ctx, const std::string& suite, const Checks& ck,
                   Status success = Status::Pass) {
  SuiteResult r;
  r.suite = suite;
  r.assertions = ck.assertions();
  r.checks = ck.tallies();
  if (ck.failed()) {
    r.status = success == Status::Counterexample ? Status::Counterexample : Status::Fail;
    r.witness_json = witness_text(ctx, suite, *ck.first_failure());
  } else {
    r.status = success == Status::Counterexample ? Status::Pass : success;
  }
  return r;
}

SuiteResult vacuous(const std::string& suite, std::string reason) {
  SuiteResult r;
  r.suite = suite;
  r.status = Status::Vacuous;
  r.reason = std::move(reason);
  return r;
}

SuiteResult skipped(const std::string& suite, std::string reason) {
  SuiteResult r;
  r.suite = suite;
  r.status = Status::Skipped;
  r.reason = std::move(reason);
  return r;
}

json subgroup_detail(const Subgroup& n) {
  json j = json::array();
  for (const auto& g : n.group.generators()) j.push_back(g.to_cycle_string(true));
  return {{"order", n.order()}, {"generators", j}};
}

// Class-level identities, checked on every group.
void class_level_checks(Context& ctx, Checks& ck) {
  const PermGroup& g = ctx.g;
  for (const auto& c : ctx.classes) {
    const Permutation& x = c.representative;
    auto detail = [&] { return json{{"class", to_json(summarize(c))}}; };
    ck.expect("class_size_divides_order", divides(c.size, g.order()), detail);
    if (!c.is_real) continue;
    const Permutation x_inv = x.inverse();
    if (c.size % 2 == 1) ck.expect("odd_real_class_is_involution", (x * x).is_identity(), detail);
    const Permutation w = c.reversing_witness.value_or(Permutation(g.degree()));
    ck.expect("reversing_witness_valid", conjugate(x, w) == x_inv && g.contains(w), detail);
    // The 2-part of a reverser still reverses.
    std::uint64_t m = w.order();
    while (m % 2 == 0) m /= 2;
    const Permutation t = w.power(static_cast<long long>(m));
    ck.expect("two_element_reverser", conjugate(x, t) == x_inv && is_power_of(t.order(), 2),
              [&] { return json{{"class", to_json(summarize(c))}, {"t", t.to_cycle_string()}}; });
    const std::uint64_t cen = c.centralizer_order(g.order());
    const std::uint64_t expected = (x * x).is_identity() ? cen : 2 * cen;
    ck.expect("generalized_centralizer_index",
              generalized_centralizer(g, x).order() == expected, detail);
    if (ctx.partition) {
      for (std::uint64_t k = 2; k < c.element_order; ++k) {
        const Permutation y = x.power(static_cast<long long>(k));
        ck.expect("powers_of_real_are_real", ctx.class_of_element(y).is_real, [&] {
          return json{{"class", to_json(summarize(c))}, {"k", k}};
        });
      }
    }
  }
  const bool only_identity_real = ctx.spectrum.entries.size() == 1;
  ck.expect("odd_order_iff_identity_only_real", (g.order() % 2 == 1) == only_identity_real);
  bool nontrivial_real_even = true;
  for (const auto& e : ctx.spectrum.entries) {
    if (e.cls.element_order > 1 && e.cls.element_order % 2 == 1) nontrivial_real_even = false;
  }
  const bool two_closed = ctx.o2.order() == p_part(g.order(), 2);
  ck.expect("real_elements_even_iff_2_closed", nontrivial_real_even == two_closed);
}

// Identities quantified over normal subgroups and their quotients.
void normal_level_checks(Context& ctx, Checks& ck) {
  const PermGroup& g = ctx.g;
  const auto& normals = ctx.normal_list();
  const std::uint64_t coset_cap = g.limits().coset_search_cap;
  for (const auto& n : normals) {
    const QuotientGroup q = quotient(g, n);
    const ClassPartition image_classes =
        q.kernel_is_trivial() ? *ctx.partition : classify(q.image());
    const bool central = ctx.center.group.contains_group(n.group);
    const bool odd_index = n.index() % 2 == 1;
    for (const auto& c : ctx.classes) {
      const Permutation& x = c.representative;
      const ConjClass& qc = image_classes.class_containing(q.project(x));
      auto detail = [&] {
        return json{{"class", to_json(summarize(c))},
                    {"normal_subgroup", subgroup_detail(n)},
                    {"quotient_class_size", qc.size}};
      };
      const bool coprime = std::gcd(c.element_order, n.order()) == 1;
      ck.expect("quotient_class_size_divides", divides(qc.size, c.size), detail);
      if (n.contains(x)) {
        ck.expect("normal_class_size_divides", divides(class_of(n.group, x).size, c.size), detail);
      }
      if (central && coprime) ck.expect("central_quotient_keeps_size", qc.size == c.size, detail);
      if (qc.is_real && coprime) ck.expect("coprime_lift_is_real", c.is_real, detail);
      if (odd_index && c.is_real) {
        ck.expect("real_lies_in_odd_index_normal", n.contains(x) && is_real(n.group, x).real,
                  detail);
      }
    }
    for (const auto& qc : image_classes.classes) {
      if (!qc.is_real) continue;
      const Permutation x = q.lift(qc.representative);
      auto detail = [&] {
        return json{{"quotient_class", to_json(summarize(qc))},
                    {"lift", x.to_cycle_string()},
                    {"normal_subgroup", subgroup_detail(n)}};
      };
      if (std::gcd(x.order(), n.order()) == 1) {
        ck.expect("coprime_lift_is_real", ctx.class_of_element(x).is_real, detail);
      }
      const auto p = prime_of_prime_power(qc.element_order);
      if (qc.element_order != 1 && (!p || *p == 2)) continue;
      if (n.order() > coset_cap) {
        ck.skip("prime_power_lift");
        continue;
      }
      std::optional<Permutation> found;
      for (const auto& y : q.coset_elements(x)) {
        const std::uint64_t o = y.order();
        const bool p_power = o == 1 || (p && is_power_of(o, *p));
        if (p_power && ctx.class_of_element(y).is_real) {
          found = y;
          break;
        }
      }
      const bool in_coset = found && q.project(*found) == qc.representative;
      const bool odd = found && found->order() % 2 == 1;
      ck.expect("prime_power_lift", in_coset && odd, detail);
    }
  }
  // Textbook ingredient: solvable with O_{2'} = 1 forces C_G(O_2) <= O_2.
  if (ctx.solvable && ctx.o2prime.is_trivial()) {
    const auto gens = ctx.o2.group.nontrivial_generators();
    g.for_each_element([&](const Permutation& y) {
      const bool centralizes = std::all_of(gens.begin(), gens.end(),
                                           [&](const Permutation& h) { return commute(y, h); });
      if (centralizes) {
        ck.expect("o2_self_centralizing", ctx.o2.contains(y),
                  [&] { return json{{"element", y.to_cycle_string()}}; });
      }
      return true;
    }, g.limits().order_cap);
  }
}

SuiteResult suite_lemmas(Context& ctx) {
  Checks ck;
  class_level_checks(ctx, ck);
  std::string reason;
  if (ctx.partition) {
    normal_level_checks(ctx, ck);
  } else {
    reason = "normal-subgroup checks need order <= " + std::to_string(kLemmaOrderBound);
  }
  SuiteResult r = finish(ctx, "lemmas", ck);
  r.reason = reason;
  return r;
}

SuiteResult suite_theorem_a(Context& ctx) {
  Checks ck;
  if (ctx.T.holds) {
    ck.expect("T_implies_solvable", ctx.solvable, [] { return json{{"property", "T"}}; });
  }
  if (!ctx.WT.holds) return vacuous("theoremA", "property WT fails");
  ck.expect("WT_implies_solvable", ctx.solvable, [] { return json{{"property", "WT"}}; });
  return finish(ctx, "theoremA", ck);
}

SuiteResult suite_theorem_b(Context& ctx) {
  if (!ctx.T.holds) return vacuous("theoremB", "property T fails");
  Checks ck;
  ck.expect("o_upper_2prime_is_2_nilpotent", is_p_nilpotent(ctx.o_upper.group, 2), [&] {
    return json{{"o_upper_2prime", subgroup_detail(ctx.o_upper)}};
  });
  const QuotientGroup q = quotient(ctx.g, ctx.o2prime);
  ck.expect("top_quotient_is_2_closed", is_p_closed(q.image(), 2), [&] {
    return json{{"o_2prime", subgroup_detail(ctx.o2prime)}};
  });
  return finish(ctx, "theoremB", ck);
}

SuiteResult suite_prop45(Context& ctx) {
  if (!ctx.T.holds) return vacuous("prop45", "property T fails");
  if (!ctx.o_upper.is_whole()) return vacuous("prop45", "O^{2'}(G) is proper");
  Checks ck;
  ck.expect("group_is_2_nilpotent", is_p_nilpotent(ctx.g, 2, ctx.classes));
  return finish(ctx, "prop45", ck);
}

SuiteResult suite_lemma41(Context& ctx) {
  if (!ctx.T.holds && !ctx.WT.holds) return vacuous("lemma41", "neither T nor WT holds");
  Checks ck;
  for (const auto& n : ctx.normal_list()) {
    const RealSpectrum sub = real_spectrum(n.group);
    std::optional<RealSpectrum> top;
    try {
      top = real_spectrum(quotient(ctx.g, n).image());
    } catch (const CapExceeded&) {
    }
    auto detail = [&] { return json{{"normal_subgroup", subgroup_detail(n)}}; };
    if (ctx.T.holds) {
      ck.expect("T_inherited_by_normal", has_property_T(sub).holds, detail);
      if (top) ck.expect("T_inherited_by_quotient", has_property_T(*top).holds, detail);
      else ck.skip("T_inherited_by_quotient");
    }
    if (ctx.WT.holds) {
      ck.expect("WT_inherited_by_normal", has_property_WT(sub).holds, detail);
      if (top) ck.expect("WT_inherited_by_quotient", has_property_WT(*top).holds, detail);
      else ck.skip("WT_inherited_by_quotient");
    }
  }
  return finish(ctx, "lemma41", ck);
}

std::optional<GoodCertificate> certify(const PermGroup& g, const std::vector<ConjClass>& classes,
                                       std::uint64_t center_order) {
  const auto good = good_elements(classes, center_order);
  if (good.empty()) return std::nullopt;
  const ConjClass& c = good.front();
  GoodCertificate cert;
  cert.cls = summarize(c);
  const Permutation w = c.reversing_witness.value_or(Permutation(g.degree()));
  cert.reversing_conjugator = w.to_cycle_string(true);
  cert.conjugator_verified =
      g.contains(w) && conjugate(c.representative, w) == c.representative.inverse();
  cert.size_factorization = factorization_text(c.size);
  cert.four_divides_size = c.size % 4 == 0;
  cert.center_order = center_order;
  cert.order_coprime_to_center = std::gcd(c.element_order, center_order) == 1;
  return cert;
}

json to_json(const GoodCertificate& c) {
  return {{"class", to_json(c.cls)},
          {"reversing_conjugator", c.reversing_conjugator},
          {"conjugator_verified", c.conjugator_verified},
          {"size_factorization", c.size_factorization},
          {"four_divides_size", c.four_divides_size},
          {"center_order", c.center_order},
          {"order_coprime_to_center", c.order_coprime_to_center}};
}

bool certificate_holds(const GoodCertificate& c) {
  return c.cls.is_real && c.conjugator_verified && c.four_divides_size &&
         c.order_coprime_to_center && c.cls.element_order > 1 &&
         is_odd_prime_power_order(c.cls.element_order);
}

SuiteResult suite_prop31(Context& ctx) {
  if (!is_nonabelian_simple(ctx.g, ctx.classes)) return skipped("prop31", "not nonabelian simple");
  Checks ck;
  const auto cert = certify(ctx.g, ctx.classes, ctx.center.order());
  ck.expect("good_element_certified", cert && certificate_holds(*cert), [&] {
    return cert ? json{{"certificate", to_json(*cert)}} : json{{"certificate", nullptr}};
  });
  SuiteResult r = finish(ctx, "prop31", ck);
  if (cert) r.reason = certificate_to_text(*cert);
  return r;
}

SuiteResult suite_conj_c(Context& ctx) {
  if (!conjecture_c_hypothesis(ctx.spectrum)) {
    return vacuous("conjC", "noncentral real class sizes have different 2-parts");
  }
  Checks ck;
  ck.expect("o_upper_2prime_is_2_nilpotent", is_p_nilpotent(ctx.o_upper.group, 2), [&] {
    json sizes = json::array();
    for (const auto& e : ctx.spectrum.entries) sizes.push_back(e.cls.size);
    return json{{"real_class_sizes", sizes}, {"o_upper_2prime", subgroup_detail(ctx.o_upper)}};
  });
  return finish(ctx, "conjC", ck, Status::Counterexample);
}

SuiteResult suite_navarro(Context& ctx) {
  if (!navarro_hypothesis(ctx.spectrum, ctx.g.order())) {
    return vacuous("navarro", "noncentral real elements have different centralizer orders");
  }
  Checks ck;
  ck.expect("group_is_solvable", ctx.solvable, [&] {
    json sizes = json::array();
    for (const auto& e : ctx.spectrum.entries) sizes.push_back(e.cls.size);
    return json{{"real_class_sizes", sizes}};
  });
  return finish(ctx, "navarro", ck, Status::Counterexample);
}

using SuiteFn = SuiteResult (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"lemmas", suite_lemmas},   {"theoremA", suite_theorem_a}, {"theoremB", suite_theorem_b},
      {"prop45", suite_prop45},   {"prop31", suite_prop31},      {"lemma41", suite_lemma41},
      {"conjC", suite_conj_c},    {"navarro", suite_navarro},
  };
  return table;
}

json to_json(const TwoFlags& f) {
  return {{"two_closed", f.two_closed}, {"two_nilpotent", f.two_nilpotent}};
}

json to_json(const SuiteResult& s) {
  json j;
  j["suite"] = s.suite;
  j["status"] = to_string(s.status);
  j["assertions"] = s.assertions;
  if (!s.reason.empty()) j["reason"] = s.reason;
  if (!s.checks.empty()) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"id", c.id},
                        {"assertions", c.assertions},
                        {"failures", c.failures},
                        {"skipped", c.skipped}});
    }
    j["checks"] = checks;
  }
  if (!s.witness_json.empty()) j["witness"] = json::parse(s.witness_json);
  return j;
}

json to_json(const GroupReport& r, bool timing) {
  json j;
  j["name"] = r.name;
  if (!r.spec.empty()) j["spec"] = r.spec;
  j["order"] = r.order;
  j["degree"] = r.degree;
  if (!r.error.empty()) {
    j["error"] = r.error;
  } else {
    j["class_count"] = r.class_count;
    j["real_class_count"] = r.real_class_count;
    j["real_class_sizes"] = r.real_sizes;
    j["odd_prime_power_real_sizes"] = r.odd_ppo_real_sizes;
    j["property_T"] = r.property_T;
    j["property_WT"] = r.property_WT;
    if (r.T_violator) j["T_violator"] = to_json(*r.T_violator);
    if (r.WT_violator) j["WT_violator"] = to_json(*r.WT_violator);
    j["solvable"] = r.solvable;
    j["center_order"] = r.center_order;
    j["o2_order"] = r.o2_order;
    j["o2prime_order"] = r.o2prime_order;
    j["o_upper_2prime_order"] = r.o_upper_2prime_order;
    j["flags_group"] = to_json(r.flags_group);
    j["flags_o_upper_2prime"] = to_json(r.flags_o_upper);
    j["flags_top_quotient"] = r.flags_top ? to_json(*r.flags_top) : json(nullptr);
    json good = json::array();
    for (const auto& c : r.good_elements) good.push_back(to_json(c));
    j["good_elements"] = good;
    j["conjecture_c"] = r.conjecture_c;
    j["navarro_hypothesis"] = r.navarro_hypothesis;
  }
  json suites = json::array();
  for (const auto& s : r.suites) suites.push_back(to_json(s));
  j["suites"] = suites;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

void fill_summary(GroupReport& r, Context& ctx) {
  const PermGroup& g = ctx.g;
  r.class_count = ctx.classes.size();
  r.real_class_count = ctx.spectrum.entries.size();
  r.real_sizes = ctx.spectrum.sizes();
  r.odd_ppo_real_sizes = ctx.spectrum.odd_ppo_sizes();
  r.property_T = ctx.T.holds;
  r.property_WT = ctx.WT.holds;
  if (ctx.T.violator) r.T_violator = summarize(*ctx.T.violator);
  if (ctx.WT.violator) r.WT_violator = summarize(*ctx.WT.violator);
  r.solvable = ctx.solvable;
  r.center_order = ctx.center.order();
  r.o2_order = ctx.o2.order();
  r.o2prime_order = ctx.o2prime.order();
  r.o_upper_2prime_order = ctx.o_upper.order();
  const std::uint64_t two = p_part(g.order(), 2);
  r.flags_group = {ctx.o2.order() == two, g.order() / ctx.o2prime.order() == two};
  r.flags_o_upper = {is_p_closed(ctx.o_upper.group, 2), is_p_nilpotent(ctx.o_upper.group, 2)};
  try {
    const PermGroup top = quotient(g, ctx.o2prime).image();
    r.flags_top = TwoFlags{is_p_closed(top, 2), is_p_nilpotent(top, 2)};
  } catch (const CapExceeded&) {
  }
  for (const auto& c : good_elements(ctx.classes, ctx.center.order())) {
    r.good_elements.push_back(summarize(c));
  }
  if (!conjecture_c_hypothesis(ctx.spectrum)) {
    r.conjecture_c = to_string(ConjectureVerdict::Vacuous);
  } else {
    r.conjecture_c = to_string(is_p_nilpotent(ctx.o_upper.group, 2)
                                   ? ConjectureVerdict::Confirmed
                                   : ConjectureVerdict::Counterexample);
  }
  r.navarro_hypothesis = navarro_hypothesis(ctx.spectrum, g.order());
}

void count_into(SuiteCounts& c, const SuiteResult& s) {
  switch (s.status) {
    case Status::Pass: ++c.pass; break;
    case Status::Fail: ++c.fail; break;
    case Status::Skipped: ++c.skipped; break;
    case Status::Vacuous: ++c.vacuous; break;
    case Status::Counterexample: ++c.counterexample; break;
  }
  c.assertions += s.assertions;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Vacuous: return "VACUOUS";
    case Status::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& default_verify_suites() {
  static const std::vector<std::string> names{"lemmas", "theoremA", "theoremB",
                                              "prop45", "prop31",   "lemma41"};
  return names;
}

const SuiteResult* GroupReport::suite(const std::string& suite_name) const {
  for (const auto& s : suites) {
    if (s.suite == suite_name) return &s;
  }
  return nullptr;
}

GroupReport verify_group(const PermGroup& group, const std::set<std::string>& suites,
                         const std::string& name, const std::string& spec) {
  for (const auto& s : suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw InvalidInput("unknown suite \"" + s + "\"");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  GroupReport r;
  r.name = name;
  r.spec = spec;
  r.order = group.order();
  r.degree = group.degree();
  std::optional<Context> ctx;
  try {
    std::vector<ConjClass> classes;
    std::optional<ClassPartition> partition;
    if (group.order() <= kLemmaOrderBound) {
      partition = classify(group);
      classes = partition->classes;
    } else {
      classes = conjugacy_classes(group);
    }
    RealSpectrum spectrum = real_spectrum(classes, name);
    ctx.emplace(Context{group, name, classes, std::move(partition), spectrum,
                        center(group, classes), o_p(group, 2, classes),
                        o_p_prime(group, 2, classes), o_upper_p_prime(group, 2, classes),
                        is_solvable(group), has_property_T(spectrum), has_property_WT(spectrum),
                        std::nullopt});
    fill_summary(r, *ctx);
  } catch (const CapExceeded& e) {
    r.error = e.what();
    r.error_is_cap = true;
  }
  for (const auto& [suite_name, fn] : suite_table()) {
    if (!suites.count(suite_name)) continue;
    if (!ctx) {
      r.suites.push_back(skipped(suite_name, r.error));
      continue;
    }
    try {
      r.suites.push_back(fn(*ctx));
    } catch (const CapExceeded& e) {
      r.suites.push_back(skipped(suite_name, e.what()));
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::optional<GoodCertificate> certify_good_element(const PermGroup& group) {
  const auto classes = conjugacy_classes(group);
  return certify(group, classes, center(group, classes).order());
}

std::vector<Prop31Result> verify_prop31(const std::vector<NamedGroup>& targets) {
  std::vector<Prop31Result> out;
  for (const auto& t : targets) {
    Prop31Result r;
    r.name = t.name;
    const auto classes = conjugacy_classes(t.group);
    if (!is_nonabelian_simple(t.group, classes)) {
      r.status = Status::Skipped;
      r.reason = "not nonabelian simple";
    } else {
      r.certificate = certify(t.group, classes, center(t.group, classes).order());
      r.status = r.certificate && certificate_holds(*r.certificate) ? Status::Pass : Status::Fail;
      if (!r.certificate) r.reason = "no good element";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string certificate_to_text(const GoodCertificate& c) {
  std::ostringstream os;
  os << "x = " << c.cls.representative << ", o(x) = " << c.cls.element_order
     << ", |x^G| = " << c.cls.size << " = " << c.size_factorization
     << (c.four_divides_size ? " (4 | size)" : " (4 does not divide size)")
     << ", x^g = x^-1 for g = " << c.reversing_conjugator
     << (c.conjugator_verified ? " (verified)" : " (NOT verified)") << ", |Z| = " << c.center_order
     << (c.order_coprime_to_center ? " (coprime)" : " (not coprime)");
  return os.str();
}

CorpusReport run_corpus(const std::vector<GroupSpec>& corpus, const CorpusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CorpusReport out;
  for (const auto& s : all_suites()) {
    if (options.suites.count(s)) out.suites.push_back(s);
  }
  std::vector<GroupReport> reports(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const GroupSpec& spec = corpus[i];
      std::string spec_text;
      try {
        spec_text = spec_string(spec);
        const PermGroup g = build(spec, options.limits);
        reports[i] = verify_group(g, options.suites, spec.name, spec_text);
      } catch (const Error& e) {
        GroupReport r;
        r.name = spec.name;
        r.spec = spec_text;
        r.error = e.what();
        r.error_is_cap = dynamic_cast<const CapExceeded*>(&e) != nullptr;
        for (const auto& s : out.suites) {
          SuiteResult sr;
          sr.suite = s;
          sr.status = r.error_is_cap ? Status::Skipped : Status::Fail;
          sr.reason = r.error;
          if (!r.error_is_cap) {
            sr.witness_json =
                json{{"schema_version", kReportSchemaVersion}, {"kind", "rcg-witness"},
                     {"name", spec.name},  {"suite", s},
                     {"spec", spec_text},  {"finding", {{"build_error", r.error}}}}
                    .dump(2);
          }
          r.suites.push_back(std::move(sr));
        }
        reports[i] = std::move(r);
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, corpus.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(reports.begin(), reports.end(), [](const GroupReport& a, const GroupReport& b) {
    return std::tie(a.name, a.spec) < std::tie(b.name, b.spec);
  });
  bool any_fail = false, any_counterexample = false;
  for (const auto& s : out.suites) out.summary[s];
  for (const auto& r : reports) {
    for (const auto& s : r.suites) {
      count_into(out.summary[s.suite], s);
      any_fail |= s.status == Status::Fail;
      any_counterexample |= s.status == Status::Counterexample;
    }
  }
  out.groups = std::move(reports);
  out.exit_code = any_fail ? 1 : (options.strict && any_counterexample ? 3 : 0);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string report_to_json(const GroupReport& report, bool timing) {
  return to_json(report, timing).dump(2);
}

std::string corpus_report_to_json(const CorpusReport& report, bool timing) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suites"] = report.suites;
  json summary = json::object();
  for (const auto& s : report.suites) {
    const SuiteCounts& c = report.summary.at(s);
    summary[s] = {{"PASS", c.pass},       {"FAIL", c.fail},
                  {"SKIPPED", c.skipped}, {"VACUOUS", c.vacuous},
                  {"COUNTEREXAMPLE", c.counterexample}, {"assertions", c.assertions}};
  }
  j["summary"] = summary;
  j["exit_code"] = report.exit_code;
  json groups = json::array();
  for (const auto& g : report.groups) groups.push_back(to_json(g, timing));
  j["groups"] = groups;
  if (timing) j["seconds"] = report.seconds;
  return j.dump(2) + "\n";
}

std::string corpus_report_to_text(const CorpusReport& report, bool timing) {
  std::ostringstream os;
  for (const auto& g : report.groups) {
    os << g.name << " |G|=" << g.order;
    if (!g.error.empty()) {
      os << " error: " << g.error;
    } else {
      os << " T=" << (g.property_T ? "yes" : "no") << " WT=" << (g.property_WT ? "yes" : "no")
         << " solvable=" << (g.solvable ? "yes" : "no");
    }
    for (const auto& s : g.suites) os << "  " << s.suite << ":" << to_string(s.status);
    if (timing) os << "  (" << g.seconds << " s)";
    os << '\n';
  }
  os << '\n';
  for (const auto& s : report.suites) {
    const SuiteCounts& c = report.summary.at(s);
    os << s << ": PASS " << c.pass << ", FAIL " << c.fail << ", SKIPPED " << c.skipped
       << ", VACUOUS " << c.vacuous << ", COUNTEREXAMPLE " << c.counterexample << ", assertions "
       << c.assertions << '\n';
  }
  if (timing) os << "total " << report.seconds << " s\n";
  return os.str();
}

ReplayOutcome replay_witness(const std::string& witness_json, const Limits& limits) {
  json w;
  try {
    w = json::parse(witness_json);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed witness: ") + e.what());
  }
  if (!w.is_object() || !w.contains("suite") || !w["suite"].is_string()) {
    throw InvalidInput("witness needs a \"suite\" field");
  }
  ReplayOutcome out;
  out.name = w.value("name", std::string{});
  const std::string suite = w["suite"].get<std::string>();
  std::optional<PermGroup> g;
  if (w.contains("group")) {
    g = parse_group_json(w["group"].dump(), limits);
  } else if (w.contains("spec")) {
    g = build(parse_spec_string(w["spec"].get<std::string>()), limits);
  } else {
    throw InvalidInput("witness carries neither \"group\" nor \"spec\"");
  }
  GroupReport r = verify_group(*g, {suite}, out.name);
  out.result = r.suites.front();
  out.reproduced =
      out.result.status == Status::Fail || out.result.status == Status::Counterexample;
  return out;
}

}  // namespace rcg

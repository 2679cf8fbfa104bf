// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "compare.hpp"
#include "json.hpp"
#include "rcg/classes.hpp"
#include "rcg/realprops.hpp"
#include "rcg/structure.hpp"
#include "rcg/verify.hpp"
#include "rcg/zoo.hpp"

#ifndef RCG_CLI_PATH
#define RCG_CLI_PATH "rcg"
#endif

namespace {

using nlohmann::json;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run(const std::string& args) {
  CommandResult r;
  const std::string cmd = std::string("\"") + RCG_CLI_PATH + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::uint64_t five_cycle_class_size(std::size_t n) {
  const auto g = rcg::alternating_group(n);
  std::vector<rcg::Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<rcg::Point>(i);
  img[0] = 1, img[1] = 2, img[2] = 3, img[3] = 4, img[4] = 0;
  return rcg::class_of(g, rcg::Permutation::from_images(img)).size;
}

const rcg::CorpusReport& corpus_report() {
  static const rcg::CorpusReport report = [] {
    rcg::CorpusOptions opt;
    const auto& s = rcg::default_verify_suites();
    opt.suites = {s.begin(), s.end()};
    return rcg::run_corpus(rcg::default_corpus(), opt);
  }();
  return report;
}

Outcome stated_values() {
  Outcome o;
  o.require(five_cycle_class_size(5) == 12, "Alt(5) 5-cycles");
  o.require(five_cycle_class_size(6) == 72, "Alt(6) 5-cycles");
  o.require(five_cycle_class_size(7) == 504, "Alt(7) 5-cycles");

  std::size_t odd_real = 0;
  bool size56 = false;
  for (const auto& c : rcg::conjugacy_classes(rcg::psl2(7))) {
    if (c.is_real && c.element_order % 2 == 1 && c.element_order > 1) {
      ++odd_real;
      size56 = c.size == 56;
    }
  }
  o.require(odd_real == 1 && size56, "PSL2(7) odd-order real class of size 56");

  bool found13 = false;
  const auto p13 = rcg::psl2(13);
  for (const auto& c : rcg::conjugacy_classes(p13)) {
    if (c.is_real && c.element_order == 7 && c.centralizer_order(p13.order()) == 7 && c.size == 156) {
      found13 = true;
    }
  }
  o.require(found13, "PSL2(13) real order-7 class");

  const auto s4 = rcg::symmetric_group(4);
  const auto spec = rcg::real_spectrum(s4);
  o.require(rcg::has_property_WT(spec).holds, "Sym(4) WT");
  o.require(!rcg::has_property_T(spec).holds, "Sym(4) not T");
  o.require(spec.odd_ppo_sizes() == std::vector<std::uint64_t>{1, 8}, "Sym(4) sizes {1, 8}");
  o.require(rcg::o_upper_p_prime(s4, 2).is_whole(), "Sym(4) O^{2'} = G");
  o.require(rcg::o_p_prime(s4, 2).is_trivial(), "Sym(4) O_{2'} = 1");
  o.require(!rcg::is_p_closed(s4, 2) && !rcg::is_p_nilpotent(s4, 2), "Sym(4) 2-closure flags");
  o.detail << (o.pass ? "all stated values reproduced" : "");
  return o;
}

Outcome suite_counts(const std::vector<std::string>& suites, std::uint64_t min_pass) {
  Outcome o;
  const auto& r = corpus_report();
  o.require(rcg::default_corpus().size() >= 30, "corpus has fewer than 30 groups");
  std::uint64_t pass = 0;
  for (const auto& s : suites) {
    const auto& c = r.summary.at(s);
    o.require(c.fail == 0, s + " has " + std::to_string(c.fail) + " failures");
    o.require(c.skipped == 0, s + " skipped " + std::to_string(c.skipped) + " groups");
    pass += c.pass;
    o.detail << s << " pass=" << c.pass << " vacuous=" << c.vacuous << " ";
  }
  o.require(pass >= min_pass, "only " + std::to_string(pass) + " non-vacuous instances");
  return o;
}

Outcome theorem_a() { return suite_counts({"theoremA"}, 5); }

Outcome theorem_b() {
  Outcome o = suite_counts({"theoremB", "prop45"}, 8);
  const auto& b = corpus_report().summary.at("theoremB");
  o.require(b.pass >= 8, "theoremB alone has fewer than 8 non-vacuous instances");
  return o;
}

Outcome lemmas() {
  Outcome o;
  const auto& r = corpus_report();
  const auto& c = r.summary.at("lemmas");
  o.require(c.fail == 0, std::to_string(c.fail) + " groups failed");
  o.require(c.assertions >= 1000, "only " + std::to_string(c.assertions) + " assertions");
  std::uint64_t small = 0;
  for (const auto& g : r.groups) {
    if (g.order > 10'000) continue;
    ++small;
    const auto* s = g.suite("lemmas");
    o.require(s && s->status == rcg::Status::Pass, g.name + " lemmas not PASS");
  }
  o.detail << "assertions=" << c.assertions << " groups<=1e4=" << small;
  return o;
}

Outcome good_elements() {
  Outcome o;
  std::vector<rcg::NamedGroup> targets;
  for (std::size_t n = 5; n <= 9; ++n) {
    targets.push_back({"Alt(" + std::to_string(n) + ")", rcg::alternating_group(n)});
  }
  for (std::uint64_t p : {5, 7, 11, 13}) {
    targets.push_back({"PSL2(" + std::to_string(p) + ")", rcg::psl2(p)});
  }
  for (const auto& r : rcg::verify_prop31(targets)) {
    const bool ok = r.status == rcg::Status::Pass && r.certificate && r.certificate->conjugator_verified &&
                    r.certificate->four_divides_size && r.certificate->order_coprime_to_center;
    o.require(ok, r.name);
    if (ok) {
      o.detail << r.name << ": o=" << r.certificate->cls.element_order << " size="
               << r.certificate->size_factorization << "; ";
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t groups = 0;
  std::uint64_t checks = 0;
  for (const auto& spec : rcg::default_corpus()) {
    const auto g = rcg::build(spec);
    if (g.order() > 10'000) continue;
    const auto cmp = oracle::compare_with_oracle(g);
    ++groups;
    checks += cmp.checks;
    for (const auto& m : cmp.mismatches) o.require(false, spec.name + ": " + m);
  }
  o.detail << "groups=" << groups << " comparisons=" << checks;
  return o;
}

bool primitive(std::uint64_t ell, std::uint64_t q, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    r = r * (q % ell) % ell;
    if (r == 1) return m == n;
  }
  return false;
}

Outcome zsigmondy() {
  Outcome o;
  std::size_t tested = 0;
  for (std::uint64_t q = 2; q <= 10; ++q) {
    for (std::uint64_t n = 3; n <= 12; ++n) {
      ++tested;
      const auto l = rcg::zsigmondy_l(q, n);
      std::uint64_t m = 1;
      for (std::uint64_t i = 0; i < n; ++i) m *= q;
      std::optional<std::uint64_t> expect;
      for (std::uint64_t d = 2, rest = m - 1; d <= rest; ++d) {
        if (rest % d) continue;
        while (rest % d == 0) rest /= d;
        if (primitive(d, q, n)) {
          expect = d;
          break;
        }
      }
      const std::string at = "(" + std::to_string(q) + "," + std::to_string(n) + ")";
      o.require(l == expect, "mismatch at " + at);
      o.require(l.has_value() != (q == 2 && n == 6), "NONE placement at " + at);
      if (l) o.require(*l % n == 1, "congruence at " + at);
    }
  }
  o.require(rcg::decomposition_count_t(3, 2) == 28, "t(3,2) != 28");
  std::size_t t_tested = 0;
  for (std::uint64_t q : {2, 4, 8}) {
    for (std::uint64_t n = 3; n <= (q == 8 ? 5 : 7); ++n) {
      ++t_tested;
      o.require(rcg::decomposition_count_t(n, q) % 4 == 0,
                "4 does not divide t(" + std::to_string(n) + "," + std::to_string(q) + ")");
    }
  }
  o.detail << "pairs=" << tested << " t checked for q=2^f at " << t_tested << " pairs";
  return o;
}

Outcome scanners() {
  Outcome o;
  for (const char* scanner : {"conjC", "navarro"}) {
    const auto r = run(std::string("scan ") + scanner + " --strict --no-timing --json -");
    o.require(r.exit_code == 0, std::string(scanner) + " exit " + std::to_string(r.exit_code));
    try {
      const auto j = json::parse(r.out);
      const auto& s = j.at("summary").at(scanner);
      const auto ce = s.at("COUNTEREXAMPLE").get<std::uint64_t>();
      o.require(ce == 0, std::string(scanner) + " counterexamples=" + std::to_string(ce));
      o.require(s.at("FAIL").get<std::uint64_t>() == 0, std::string(scanner) + " failures");
      o.detail << scanner << " groups=" << j.at("groups").size() << " counterexamples=" << ce << " ";
    } catch (const std::exception& e) {
      o.require(false, std::string(scanner) + " report unreadable: " + e.what());
    }
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto a = run("verify --json - --no-timing --jobs 1");
  const auto b = run("verify --json - --no-timing --jobs 4");
  o.require(a.exit_code == 0 && b.exit_code == 0, "verify exit codes " + std::to_string(a.exit_code) +
                                                      "/" + std::to_string(b.exit_code));
  o.require(!a.out.empty(), "empty report");
  o.require(a.out == b.out, "reports differ");
  o.detail << "report bytes=" << a.out.size();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 stated values", stated_values},
      {"2 theorem A suite", theorem_a},
      {"3 theorem B and prop45 suites", theorem_b},
      {"4 lemma suite", lemmas},
      {"5 good elements in simple groups", good_elements},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 zsigmondy and decomposition count", zsigmondy},
      {"8 scanners", scanners},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

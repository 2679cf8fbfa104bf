// rcg: real conjugacy classes, group structure, and corpus verification.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rcg/classes.hpp"
#include "rcg/errors.hpp"
#include "rcg/realprops.hpp"
#include "rcg/structure.hpp"
#include "rcg/verify.hpp"
#include "rcg/zoo.hpp"

namespace {

using namespace rcg;

constexpr int kExitError = 2;

struct Loaded {
  std::string name;
  PermGroup group;
};

Loaded load(const std::string& text) {
  GroupSpec spec = parse_spec_string(text);
  return {spec.name, build(spec)};
}

std::vector<GroupSpec> corpus_from(const std::string& path) {
  return path.empty() ? default_corpus() : load_corpus(path);
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x);
  }
  return "{" + out + "}";
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string safe_file_name(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return s;
}

// Writes one file per FAIL / COUNTEREXAMPLE witness; returns the count.
std::size_t dump_witnesses(const CorpusReport& report, const std::string& dir) {
  std::size_t n = 0;
  if (!dir.empty()) std::filesystem::create_directories(dir);
  for (const auto& g : report.groups) {
    for (const auto& s : g.suites) {
      if (s.witness_json.empty()) continue;
      ++n;
      if (dir.empty()) continue;
      const auto path = std::filesystem::path(dir) / (safe_file_name(g.name) + "." + s.suite + ".json");
      write_text(path.string(), s.witness_json + "\n");
    }
  }
  return n;
}

std::set<std::string> parse_suites(const std::string& text) {
  std::set<std::string> out;
  if (text.empty()) {
    out.insert(default_verify_suites().begin(), default_verify_suites().end());
    return out;
  }
  if (text == "all") {
    out.insert(all_suites().begin(), all_suites().end());
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(all_suites().begin(), all_suites().end(), item) == all_suites().end()) {
      throw InvalidInput("unknown suite \"" + item + "\"");
    }
    out.insert(item);
  }
  if (out.empty()) throw InvalidInput("empty suite list");
  return out;
}

int cmd_info(const std::string& spec) {
  const auto [name, g] = load(spec);
  std::cout << "name:        " << name << '\n'
            << "degree:      " << g.degree() << '\n'
            << "order:       " << g.order() << " = " << [&] {
                 std::string f;
                 for (const auto& [p, e] : factorize(g.order())) {
                   if (!f.empty()) f += " * ";
                   f += std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
                 }
                 return f.empty() ? std::string("1") : f;
               }() << '\n';
  std::cout << "generators:\n";
  for (const auto& x : g.generators()) std::cout << "  " << x.to_cycle_string() << '\n';
  std::cout << "base:        ";
  for (auto b : g.base()) std::cout << b + 1 << ' ';
  std::cout << "\norbit sizes: ";
  for (auto s : g.basic_orbit_sizes()) std::cout << s << ' ';
  std::cout << '\n';
  return 0;
}

int cmd_classes(const std::string& spec, bool real_only) {
  const auto [name, g] = load(spec);
  const auto classes = conjugacy_classes(g);
  std::cout << name << ": " << classes.size() << " classes, |G| = " << g.order() << '\n';
  std::cout << std::left << std::setw(5) << "#" << std::setw(7) << "order" << std::setw(10) << "size"
            << std::setw(12) << "|C(x)|" << std::setw(6) << "real" << "representative\n";
  std::size_t i = 0;
  for (const auto& c : classes) {
    ++i;
    if (real_only && !c.is_real) continue;
    std::cout << std::setw(5) << i << std::setw(7) << c.element_order << std::setw(10) << c.size
              << std::setw(12) << c.centralizer_order(g.order()) << std::setw(6)
              << (c.is_real ? "yes" : "no") << c.representative.to_cycle_string();
    if (c.is_real && c.reversing_witness && !c.reversing_witness->is_identity()) {
      std::cout << "   reversed by " << c.reversing_witness->to_cycle_string();
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_check(const std::string& spec, const std::string& property) {
  const auto [name, g] = load(spec);
  const RealSpectrum s = real_spectrum(g, name);
  const PropertyVerdict v = property == "T" ? has_property_T(s) : has_property_WT(s);
  std::cout << name << ": property " << property << (v.holds ? " holds" : " fails") << '\n';
  std::cout << "odd prime power order real class sizes: " << join(s.odd_ppo_sizes()) << '\n';
  if (v.violator) {
    std::cout << "violating class: " << v.violator->representative.to_cycle_string()
              << " of order " << v.violator->element_order << ", size " << v.violator->size << '\n';
  }
  return v.holds ? 0 : 1;
}

int cmd_structure(const std::string& spec) {
  const auto [name, g] = load(spec);
  const auto classes = conjugacy_classes(g);
  std::cout << name << ", |G| = " << g.order() << '\n';
  std::cout << "center:              " << center(g, classes).order() << '\n';
  std::cout << "derived series:     ";
  for (const auto& h : derived_series(g)) std::cout << ' ' << h.order();
  std::cout << "\nsolvable:            " << (is_solvable(g) ? "yes" : "no") << '\n';
  const Subgroup o2 = o_p(g, 2, classes);
  const Subgroup o2p = o_p_prime(g, 2, classes);
  const Subgroup up = o_upper_p_prime(g, 2, classes);
  std::cout << "O_2:                 " << o2.order() << '\n'
            << "O_{2'}:              " << o2p.order() << '\n'
            << "O^{2'}:              " << up.order() << '\n'
            << "Sylow 2-subgroup:    " << sylow_subgroup(g, 2).order() << '\n'
            << "2-closed:            " << (is_p_closed(g, 2, classes) ? "yes" : "no") << '\n'
            << "2-nilpotent:         " << (is_p_nilpotent(g, 2, classes) ? "yes" : "no") << '\n';
  try {
    std::cout << "normal subgroups:   ";
    for (const auto& n : normal_subgroups(g, classes)) std::cout << ' ' << n.order();
    std::cout << '\n';
  } catch (const CapExceeded& e) {
    std::cout << " (skipped: " << e.what() << ")\n";
  }
  return 0;
}

int cmd_good(const std::string& spec) {
  const auto [name, g] = load(spec);
  const auto classes = conjugacy_classes(g);
  const auto z = center(g, classes).order();
  const auto good = good_elements(classes, z);
  std::cout << name << ": " << good.size() << " good class(es), |Z| = " << z << '\n';
  for (const auto& c : good) {
    std::cout << "  order " << c.element_order << ", size " << c.size << ": "
              << c.representative.to_cycle_string() << '\n';
  }
  if (const auto cert = certify_good_element(g)) {
    std::cout << "certificate: " << certificate_to_text(*cert) << '\n';
  }
  return 0;
}

int cmd_zsigmondy(std::uint64_t q, std::uint64_t n) {
  const auto l = zsigmondy_l(q, n);
  std::cout << (l ? std::to_string(*l) : std::string("NONE")) << '\n';
  return 0;
}

struct RunFlags {
  std::string corpus;
  std::string suites;
  unsigned jobs = 1;
  std::string json_path;
  bool no_timing = false;
  bool strict = false;
  std::string witness_dir;
};

int cmd_verify(const RunFlags& f) {
  CorpusOptions o;
  o.suites = parse_suites(f.suites);
  o.jobs = f.jobs;
  o.strict = f.strict;
  const CorpusReport r = run_corpus(corpus_from(f.corpus), o);
  if (!f.json_path.empty()) write_text(f.json_path, corpus_report_to_json(r, !f.no_timing));
  if (f.json_path != "-") std::cout << corpus_report_to_text(r, !f.no_timing);
  dump_witnesses(r, f.witness_dir);
  return r.exit_code;
}

int cmd_scan(const std::string& which, const RunFlags& f) {
  CorpusOptions o;
  o.suites = {which};
  o.jobs = f.jobs;
  o.strict = f.strict;
  const CorpusReport r = run_corpus(corpus_from(f.corpus), o);
  const SuiteCounts& c = r.summary.at(which);
  std::ostream& out = f.json_path == "-" ? std::cerr : std::cout;
  for (const auto& g : r.groups) {
    const SuiteResult* s = g.suite(which);
    if (s && s->status == Status::Counterexample) {
      out << "COUNTEREXAMPLE " << g.name << '\n' << s->witness_json << '\n';
    } else if (s && s->status == Status::Fail) {
      out << "FAIL " << g.name << ": " << s->reason << '\n';
    }
  }
  out << which << ": " << r.groups.size() << " groups, " << c.pass << " hypothesis holds, "
            << c.vacuous << " vacuous, " << c.skipped << " skipped, " << c.counterexample
            << " counterexample(s)\n";
  if (!f.json_path.empty()) write_text(f.json_path, corpus_report_to_json(r, !f.no_timing));
  dump_witnesses(r, f.witness_dir);
  return r.exit_code;
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const ReplayOutcome out = replay_witness(buf.str());
  std::cout << out.name << " " << out.result.suite << ": " << to_string(out.result.status) << '\n';
  for (const auto& c : out.result.checks) {
    if (c.failures) std::cout << "  " << c.id << ": " << c.failures << " failure(s)\n";
  }
  std::cout << (out.reproduced ? "reproduced\n" : "not reproduced\n");
  return out.reproduced ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real conjugacy classes and structure of permutation groups"};
  app.require_subcommand(1);
  int code = 0;

  std::string spec;
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", spec, "sym:4, alt:7, psl2:13, affine:7,3, q8, sd16, file:PATH, a*b")
        ->required();
  };

  auto* info = app.add_subcommand("info", "Degree, order, generators and base");
  add_spec(info);
  info->callback([&] { code = cmd_info(spec); });

  bool real_only = false;
  auto* classes = app.add_subcommand("classes", "Conjugacy classes with realness");
  add_spec(classes);
  classes->add_flag("--real-only", real_only, "List only real classes");
  classes->callback([&] { code = cmd_classes(spec, real_only); });

  std::string property;
  auto* check = app.add_subcommand("check", "Test property T or WT (exit 1 when it fails)");
  add_spec(check);
  check->add_option("--property", property, "T or WT")->required()->check(CLI::IsMember({"T", "WT"}));
  check->callback([&] { code = cmd_check(spec, property); });

  auto* structure = app.add_subcommand("structure", "Center, cores, series and normal subgroups");
  add_spec(structure);
  structure->callback([&] { code = cmd_structure(spec); });

  auto* good = app.add_subcommand("good", "Good elements with a certificate");
  add_spec(good);
  good->callback([&] { code = cmd_good(spec); });

  std::uint64_t zq = 0, zn = 0;
  auto* zs = app.add_subcommand("zsigmondy", "Smallest primitive prime divisor of q^n - 1");
  zs->add_option("q", zq)->required();
  zs->add_option("n", zn)->required();
  zs->callback([&] { code = cmd_zsigmondy(zq, zn); });

  RunFlags flags;
  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--corpus", flags.corpus, "Corpus file (JSON array of group specs)");
    sub->add_option("--jobs", flags.jobs, "Groups verified concurrently")->check(CLI::PositiveNumber);
    sub->add_option("--json", flags.json_path, "Write the JSON report here ('-' for stdout)");
    sub->add_flag("--no-timing", flags.no_timing, "Omit timings from reports");
    sub->add_option("--witness-dir", flags.witness_dir, "Write FAIL/COUNTEREXAMPLE witnesses here");
    sub->add_flag("--strict", flags.strict, "Counterexamples give a nonzero exit code");
  };

  auto* verify = app.add_subcommand("verify", "Run verification suites over a corpus");
  add_run_flags(verify);
  verify->add_option("--suites", flags.suites,
                     "Comma-separated suites, or 'all' (default: lemmas,theoremA,theoremB,"
                     "prop45,prop31,lemma41)");
  verify->callback([&] { code = cmd_verify(flags); });

  std::string scanner;
  auto* scan = app.add_subcommand("scan", "Search the corpus for counterexamples");
  scan->add_option("scanner", scanner, "conjC or navarro")
      ->required()
      ->check(CLI::IsMember({"conjC", "navarro"}));
  add_run_flags(scan);
  scan->callback([&] { code = cmd_scan(scanner, flags); });

  std::string witness;
  auto* replay = app.add_subcommand("replay", "Re-run the suite recorded in a witness file");
  replay->add_option("witness", witness)->required();
  replay->callback([&] { code = cmd_replay(witness); });

  auto* corpus = app.add_subcommand("corpus", "Print the built-in corpus as JSON");
  corpus->callback([&] { std::cout << corpus_to_json(default_corpus()) << '\n'; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const rcg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return code;
}

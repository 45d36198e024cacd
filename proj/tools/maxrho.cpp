#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maxrho/error.hpp"
#include "maxrho/graph6.hpp"
#include "maxrho/json_io.hpp"
#include "maxrho/perron.hpp"
#include "maxrho/verify.hpp"

using namespace maxrho;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& path) {
  std::string text = slurp(path);
  const auto nl = text.find('\n');
  if (nl != std::string::npos) text.resize(nl);
  return graph6_decode(text);
}

void write_out(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + *path + "'");
  out << text;
}

int report(const VerificationRun& run) {
  std::cout << run.to_json().dump(2) << '\n';
  std::cerr << run.suite << ": " << run.checks.size() - run.failures() << "/" << run.checks.size() << " checks passed\n";
  return run.passed() ? 0 : kExitFail;
}

struct Options {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> delta;
  std::optional<std::string> profile, out, in, partition, emit, checkpoint;
  double tol = kDefaultPerronTol;
  std::size_t max_degree = 0;
  bool extremal = false;
  long n_min = 0, n_max = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string suite;
};

int cmd_construct(const Options& o) {
  FamilyId id;
  id.tag = family_tag_from_string(o.family);
  id.n = o.n;
  id.delta = o.delta;
  if (o.profile) id.profile = profile_from_json(parse_json(slurp(*o.profile)));
  write_out(o.out, graph6_encode(build(id)) + "\n");
  return 0;
}

int cmd_spectrum(const Options& o) {
  const Graph g = read_graph(*o.in);
  const PerronPair p = perron(g, o.tol);
  Json j{{"n", g.order()},       {"rho", p.rho},
         {"vector", p.vector},   {"residual", p.residual},
         {"iterations", p.iterations}, {"max_degree", g.max_degree()}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_quotient(const Options& o) {
  const Graph g = read_graph(*o.in);
  const Partition p = partition_from_json(g.order(), parse_json(slurp(*o.partition)));
  const QuotientSpec q = quotient(g, p);
  const QuotientBoundReport r = quotient_bound_check(g, p);
  Json j{{"partition", to_json(p)}, {"matrix", to_json(q.matrix)}, {"equitable", q.equitable},
         {"rho_graph", r.rho_graph}, {"rho_quotient", r.rho_quotient}, {"bound_holds", r.holds}};
  std::cout << j.dump(2) << '\n';
  return r.holds ? 0 : kExitFail;
}

int cmd_enumerate(const Options& o) {
  const EnumSpec spec{o.n, o.max_degree, true, true};
  if (o.extremal) {
    const ExtremalReport rep = extremal_search(spec, o.checkpoint);
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
  }
  std::size_t skip = 0, emitted = 0;
  if (o.checkpoint && std::filesystem::exists(*o.checkpoint)) {
    const Json j = parse_json(slurp(*o.checkpoint));
    if (j.at("n") != spec.n || j.at("max_degree") != spec.max_degree)
      throw InputError("checkpoint belongs to a different spec");
    skip = j.at("completed_roots");
    emitted = j.at("emitted");
  }
  std::ofstream file;
  if (o.emit) {
    file.open(*o.emit, skip > 0 ? std::ios::app : std::ios::trunc);
    if (!file) throw InputError("cannot write '" + *o.emit + "'");
  }
  std::ostream& out = o.emit ? static_cast<std::ostream&>(file) : std::cout;
  std::string pending;
  auto emit = [&](const SmallGraph& g) {
    pending += graph6_encode(from_small(g));
    pending += '\n';
    ++emitted;
  };
  auto done = [&](std::size_t completed) {
    out << pending << std::flush;
    pending.clear();
    if (!o.checkpoint) return;
    const Json j{{"n", spec.n}, {"max_degree", spec.max_degree}, {"completed_roots", completed}, {"emitted", emitted}};
    const std::string tmp = *o.checkpoint + ".tmp";
    std::ofstream(tmp) << j.dump() << '\n';
    std::filesystem::rename(tmp, *o.checkpoint);
  };
  enumerate(spec, emit, skip, done);
  std::cerr << "emitted " << emitted << " graphs\n";
  return 0;
}

int cmd_verify(const Options& o) {
  auto range = [&](long lo, long hi) {
    return std::pair<long, long>{o.n_min ? o.n_min : lo, o.n_max ? o.n_max : hi};
  };
  if (o.suite == "signs") {
    auto [a, b] = range(59, 500);
    return report(verify_signs(a, b));
  }
  if (o.suite == "formulas") {
    auto [a, b] = range(8, 200);
    return report(verify_formulas(a, b));
  }
  if (o.suite == "theorem-n2") {
    auto [a, b] = range(5, 8);
    return report(verify_theorem_n2(a, b));
  }
  if (o.suite == "theorem-n3") {
    auto [a, b] = range(59, 200);
    return report(verify_theorem_n3(a, b));
  }
  if (o.suite == "lemmas") {
    VerificationRun run = verify_lemmas(o.trials, o.seed);
    auto [a, b] = range(8, 100);
    run.absorb(verify_equitable(a, b));
    run.parameters["n_min"] = a;
    run.parameters["n_max"] = b;
    return report(run);
  }
  if (o.suite == "switching") return report(verify_switching(o.trials, o.seed));
  if (o.suite == "sandwich") {
    if (o.n == 0) return report(verify_sandwich_grid());
    if (!o.delta) throw InputError("sandwich needs --delta with --n");
    const ComplementProfile p =
        o.profile ? profile_from_json(parse_json(slurp(*o.profile))) : default_profile(o.n, *o.delta, 1);
    return report(verify_sandwich(o.n, *o.delta, p));
  }
  throw InputError("unknown suite '" + o.suite + "'");
}

int cmd_compare(const Options& o) {
  const FamilyTable t = compare_families(static_cast<long>(o.n));
  if (o.format == "json")
    std::cout << to_json(t).dump(2) << '\n';
  else
    std::cout << to_csv(t);
  if (!t.run.passed())
    for (const auto& c : t.run.checks)
      if (!c.pass) std::cerr << "failed: " << c.name << ' ' << c.detail.dump() << '\n';
  return t.run.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius tools for nonregular graphs with large maximum degree"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a family graph and print it as graph6");
  construct->add_option("--family", o.family, "g|h1|h2|g21|profile|gdd|gd1")->required();
  construct->add_option("--n", o.n, "Order")->required();
  construct->add_option("--delta", o.delta, "Low degree (t for family g)");
  construct->add_option("--profile", o.profile, "Complement profile JSON file");
  construct->add_option("--out", o.out, "Output file");

  auto* spectrum = app.add_subcommand("spectrum", "Perron eigenpair of a graph6 graph");
  spectrum->add_option("--in", o.in, "graph6 file")->required();
  spectrum->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::Range(1e-14, 1e-6));

  auto* quot = app.add_subcommand("quotient", "Quotient matrix of a partition");
  quot->add_option("--in", o.in, "graph6 file")->required();
  quot->add_option("--partition", o.partition, "Partition JSON file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Connected nonregular graphs with given order and maximum degree");
  enumerate->add_option("--n", o.n, "Order")->required();
  enumerate->add_option("--max-degree", o.max_degree, "Maximum degree")->required();
  enumerate->add_option("--emit", o.emit, "graph6 output file");
  enumerate->add_option("--checkpoint", o.checkpoint, "Resumable progress file");
  enumerate->add_flag("--extremal", o.extremal, "Report the graphs of largest spectral radius");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "signs|formulas|theorem-n2|theorem-n3|lemmas|switching|sandwich")
      ->required()
      ->check(CLI::IsMember({"signs", "formulas", "theorem-n2", "theorem-n3", "lemmas", "switching", "sandwich"}));
  verify->add_option("--n-min", o.n_min, "Smallest order");
  verify->add_option("--n-max", o.n_max, "Largest order");
  verify->add_option("--trials", o.trials, "Random trials");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--n", o.n, "Order (sandwich)");
  verify->add_option("--delta", o.delta, "Low degree (sandwich)");
  verify->add_option("--profile", o.profile, "Complement profile JSON file (sandwich)");

  auto* compare = app.add_subcommand("compare-families", "Rank family quotients by spectral radius");
  compare->add_option("--n", o.n, "Order")->required();
  compare->add_option("--format", o.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*construct) code = cmd_construct(o);
    else if (*spectrum) code = cmd_spectrum(o);
    else if (*quot) code = cmd_quotient(o);
    else if (*enumerate) code = cmd_enumerate(o);
    else if (*verify) code = cmd_verify(o);
    else if (*compare) code = cmd_compare(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  std::cerr << "wall time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
            << " s\n";
  return code;
}

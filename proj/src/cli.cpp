#include "qcrystal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcrystal/characters.hpp"
#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/shifted_tableaux.hpp"
#include "qcrystal/verify.hpp"
#include "qcrystal/weyl.hpp"

namespace qcrystal {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int power = 0;
  std::string shape;
  std::string format = "json";
  std::string out_path;
  std::optional<std::size_t> budget;
  std::string reading = "me";
  bool stats = false;
  unsigned workers = 1;

  std::string suite = "all";
  int n_max = 4;
  int power_max = 6;
  int shape_max = 6;
};

std::size_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  const char* env = std::getenv("QCRYSTAL_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultNodeBudget;
  std::size_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string("QCRYSTAL_BUDGET: not a node count: '") + env + "'");
  }
  return value;
}

Alphabet alphabet_of(const Options& o) {
  if (o.n < 2 || o.n > 255) throw UsageError("--n must be in 2..255");
  return Alphabet(o.n);
}

StrictPartition shape_of(const Options& o) {
  try {
    return StrictPartition::parse(o.shape);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--shape: ") + e.what());
  }
}

ReadingStyle reading_of(const Options& o) {
  if (o.reading == "me") return ReadingStyle::middle_eastern;
  if (o.reading == "fe") return ReadingStyle::far_eastern;
  throw UsageError("--reading must be me or fe");
}

GraphFormat format_of(const Options& o) {
  try {
    return parse_format(o.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--format: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + o.out_path);
}

void print_stats(const CrystalGraph& g, const std::vector<std::string>& captions,
                 std::ostream& out) {
  const auto comps = components(g);
  out << "nodes=" << g.size() << "\n";
  out << "edges=" << g.edges().size() << "\n";
  out << "components=" << comps.size() << "\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!is_highest_weight(g.node(k), g.alphabet())) continue;
    out << "hw " << (captions.empty() ? g.node(k).to_string() : captions[k]) << " weight "
        << g.weight_of(k).to_string() << "\n";
  }
}

void write_graph(const Options& o, const CrystalGraph& g, const std::vector<std::string>& captions,
                 std::ostream& out) {
  const GraphFormat fmt = format_of(o);
  if (o.stats) print_stats(g, captions, out);
  if (!o.stats || !o.out_path.empty()) emit(o, serialize_graph(g, fmt, captions), out);
}

int cmd_tensor(const Options& o, std::ostream& out) {
  const Alphabet a = alphabet_of(o);
  if (o.power < 0) throw UsageError("--power must be >= 0");
  format_of(o);
  const CrystalGraph g = build_tensor_power(a, o.power, resolve_budget(o), o.workers);
  write_graph(o, g, {}, out);
  return kExitOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  const Alphabet a = alphabet_of(o);
  const StrictPartition shape = shape_of(o);
  const ReadingStyle style = reading_of(o);
  format_of(o);
  const CrystalGraph g = build_tableau_crystal(shape, a, style);
  if (g.size() > resolve_budget(o)) throw BudgetExceeded(g.size(), resolve_budget(o));
  const ShiftedDiagram diagram(shape);
  std::vector<std::string> captions;
  for (const Word& w : g.nodes()) {
    auto t = from_reading(diagram, w, style, a);
    if (!t) throw std::logic_error("node " + w.to_string() + " is not a tableau reading");
    captions.push_back(t->to_string());
  }
  write_graph(o, g, captions, out);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Alphabet a = alphabet_of(o);
  if (o.power < 0) throw UsageError("--power must be >= 0");
  const auto table = multiplicity_table(a, o.power, resolve_budget(o));
  std::size_t covered = 0;
  std::size_t expected = 1;
  for (int k = 0; k < o.power; ++k) expected *= static_cast<std::size_t>(o.n);

  out << "shape\tmultiplicity\tsize\n";
  // largest shape first
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    out << it->first.to_string() << "\t" << it->second.count << "\t"
        << it->second.component_size << "\n";
    covered += it->second.count * it->second.component_size;
  }
  if (o.power == 0) covered = 1;
  out << "total=" << covered << " expected=" << expected << "\n";
  return covered == expected ? kExitOk : kExitFailure;
}

int cmd_hwv(const Options& o, std::ostream& out) {
  const Alphabet a = alphabet_of(o);
  if (o.power < 0) throw UsageError("--power must be >= 0");
  const CrystalGraph g = build_tensor_power(a, o.power, resolve_budget(o), o.workers);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (is_highest_weight(g.node(k), a)) {
      out << g.node(k).to_string() << "\t" << g.weight_of(k).to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_character(const Options& o, std::ostream& out) {
  const Alphabet a = alphabet_of(o);
  WeightPolynomial ch(a.rank());
  if (!o.shape.empty()) {
    ch = character(highest_weight_crystal(shape_of(o), a));
  } else {
    if (o.power < 0) throw UsageError("--power must be >= 0");
    ch = character(build_tensor_power(a, o.power, resolve_budget(o), o.workers));
  }
  // dominant-first listing
  for (auto it = ch.terms().rbegin(); it != ch.terms().rend(); ++it) {
    out << it->first.to_string() << "\t" << it->second << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else if (is_suite(o.suite)) {
    suites.push_back(o.suite);
  } else {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  if (o.n_max < 2) throw UsageError("--n-max must be >= 2");
  if (o.power_max < 0 || o.shape_max < 0) throw UsageError("bounds must be >= 0");
  const bool as_json = o.format == "json";
  if (!as_json && o.format != "text") throw UsageError("--format must be text or json for verify");

  VerifyBounds bounds;
  bounds.n_max = o.n_max;
  bounds.power_max = o.power_max;
  bounds.shape_max = o.shape_max;

  bool all_passed = true;
  for (const std::string& name : suites) {
    const VerificationReport r = run_suite(name, bounds, [&](const std::string& s, const Failure& f) {
      err << "[" << s << "] " << f.input << ": expected " << f.expected << ", got " << f.actual
          << "\n";
    });
    out << (as_json ? report_json(r) : report_text(r));
    err << name << " elapsed " << r.elapsed.count() << " s\n";
    all_passed = all_passed && r.passed();
  }
  return all_passed ? kExitOk : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o, bool needs_power) {
  cmd->add_option("--n", o.n, "alphabet size n >= 2")->required();
  auto* power = cmd->add_option("--power", o.power, "tensor power N");
  if (needs_power) power->required();
  cmd->add_option("--budget", o.budget, "maximum node count");
  cmd->add_option("--workers", o.workers, "threads for edge construction")
      ->check(CLI::Range(1u, 256u));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q(n)-crystal toolkit", "qcrystal"};
  app.require_subcommand(1);

  auto* tensor = app.add_subcommand("tensor", "crystal graph of B^(x)N");
  add_common(tensor, o, true);
  tensor->add_option("--format", o.format, "dot or json");
  tensor->add_option("--out", o.out_path, "output file (default stdout)");
  tensor->add_flag("--stats", o.stats, "print node, edge, component and hw counts");

  auto* tableaux = app.add_subcommand("tableaux", "crystal of tableaux on Y_lambda");
  tableaux->add_option("--n", o.n, "alphabet size n >= 2")->required();
  tableaux->add_option("--shape", o.shape, "strict partition, e.g. 3,1")->required();
  tableaux->add_option("--reading", o.reading, "me or fe");
  tableaux->add_option("--format", o.format, "dot or json");
  tableaux->add_option("--out", o.out_path, "output file (default stdout)");
  tableaux->add_option("--budget", o.budget, "maximum node count");
  tableaux->add_flag("--stats", o.stats, "print node, edge, component and hw counts");

  auto* decompose = app.add_subcommand("decompose", "highest weight census of B^(x)N");
  add_common(decompose, o, true);

  auto* hwv = app.add_subcommand("hwv", "list highest weight words of B^(x)N");
  add_common(hwv, o, true);

  auto* charac = app.add_subcommand("character", "weight multiplicities");
  add_common(charac, o, false);
  charac->add_option("--shape", o.shape, "character of B(lambda) instead of B^(x)N");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suite, "suite name or all");
  verify->add_option("--n-max", o.n_max, "largest n");
  verify->add_option("--power-max", o.power_max, "largest tensor power");
  verify->add_option("--shape-max", o.shape_max, "largest |lambda| for the reading suite");
  verify->add_option("--format", o.format, "text or json")->default_str("text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (verify->parsed() && verify->count("--format") == 0) o.format = "text";

  try {
    if (tensor->parsed()) return cmd_tensor(o, out);
    if (tableaux->parsed()) return cmd_tableaux(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (hwv->parsed()) return cmd_hwv(o, out);
    if (charac->parsed()) return cmd_character(o, out);
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise with --budget or QCRYSTAL_BUDGET)\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qcrystal

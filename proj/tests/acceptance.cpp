// Acceptance criteria 1-11.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "qcrystal/characters.hpp"
#include "qcrystal/cli.hpp"
#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/serialize.hpp"
#include "qcrystal/verify.hpp"
#include "qcrystal/weyl.hpp"

using namespace qcrystal;

namespace {

// Every graph produced along the way, for the round-trip criterion.
std::vector<CrystalGraph> produced;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string cli_stdout(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(args, out, err);
  return out.str();
}

std::size_t source_count(const CrystalGraph& g, std::size_t& source) {
  std::vector<bool> has_incoming(g.size(), false);
  for (const Edge& e : g.edges()) has_incoming[e.dst] = true;
  std::size_t count = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!has_incoming[k]) {
      ++count;
      source = k;
    }
  }
  return count;
}

bool has_arrow(const CrystalGraph& g, const Word& src, OperatorLabel label, const Word& dst) {
  auto s = g.find(src);
  auto d = g.find(dst);
  return s && d && g.lower(*s, label.slot(g.alphabet())) == *d;
}

void absorb(Outcome& o, const VerificationReport& r) {
  if (!o.detail.empty()) o.detail += ", ";
  o.detail += r.suite + " checked=" + std::to_string(r.checked) +
              " failures=" + std::to_string(r.failure_count);
  if (!r.passed()) {
    o.ok = false;
    o.detail += "\n" + report_text(r);
  }
}

Outcome tensor_square() {
  Outcome o;
  int code = 0;
  const std::string text = cli_stdout({"tensor", "--n", "3", "--power", "2", "--format", "json"}, code);
  o.require(code == kExitOk, "exit code " + std::to_string(code));
  const CrystalGraph g = parse_graph(text);
  produced.push_back(g);
  o.require(g.size() == 9, "node count " + std::to_string(g.size()));
  o.require(components(g).size() == 1, "not connected");
  std::size_t source = 0;
  o.require(source_count(g, source) == 1 && g.node(source) == Word({1, 1}), "unique source 1⊗1");
  const auto one = OperatorLabel::even(1);
  const auto two = OperatorLabel::even(2);
  const auto bar = OperatorLabel::odd_one();
  const std::vector<std::tuple<Word, OperatorLabel, Word>> spots{
      {Word{1, 1}, one, Word{2, 1}}, {Word{1, 1}, bar, Word{1, 2}}, {Word{2, 1}, two, Word{3, 1}},
      {Word{2, 1}, bar, Word{2, 2}}, {Word{1, 3}, one, Word{2, 3}}, {Word{1, 3}, bar, Word{2, 3}},
  };
  for (const auto& [s, l, d] : spots) {
    o.require(has_arrow(g, s, l, d), "missing " + s.to_string() + " -" + l.token() + "-> " + d.to_string());
  }
  if (o.ok) o.detail = "9 nodes, 12 arrows, source 1⊗1";
  return o;
}

Outcome tableaux_31() {
  Outcome o;
  int code = 0;
  const std::string text = cli_stdout({"tableaux", "--shape", "3,1", "--n", "3", "--format", "json"}, code);
  o.require(code == kExitOk, "exit code " + std::to_string(code));
  const CrystalGraph g = parse_graph(text);
  produced.push_back(g);
  const Alphabet a(3);
  const StrictPartition shape({3, 1});
  const ShiftedDiagram diagram(shape);
  o.require(g.size() == 24, "node count " + std::to_string(g.size()));
  const auto comps = components(g);
  o.require(comps.size() == 1, "components " + std::to_string(comps.size()));
  const Word top = reading(highest_tableau(shape, a), ReadingStyle::middle_eastern);
  o.require(comps.size() == 1 && comps[0].hw_nodes.size() == 1 && comps[0].hw_word() == top,
            "highest weight node is not the diagonal filling");

  auto caption = [&](std::size_t k) {
    auto t = from_reading(diagram, g.node(k), ReadingStyle::middle_eastern, a);
    return t ? t->to_string() : std::string("?");
  };
  std::set<std::tuple<std::string, std::string, std::string>> mine;
  for (const Edge& e : g.edges()) mine.emplace(caption(e.src), e.label.token(), caption(e.dst));
  std::set<std::tuple<std::string, std::string, std::string>> golden;
  std::ifstream in(std::string(QCRYSTAL_GOLDEN_DIR) + "/tableaux_31_n3_edges.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string s, l, d;
    fields >> s >> l >> d;
    golden.emplace(s, l, d);
  }
  o.require(golden.size() == 38, "golden file has " + std::to_string(golden.size()) + " arrows");
  o.require(mine == golden, "edge list differs from the golden transcription");
  if (o.ok) o.detail = "24 nodes, 38 arrows match golden, hw 1/12/1";
  return o;
}

Outcome nilpotency() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 4;
  b.power_max = 6;
  absorb(o, run_suite("nilpotency", b));
  return o;
}

Outcome characterization() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 4;
  b.power_max = 6;
  absorb(o, run_suite("charhw", b));
  absorb(o, run_suite("strict", b));
  return o;
}

Outcome associativity() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 4;
  b.assoc_trials = 10'000;
  b.assoc_length_max = 9;
  absorb(o, run_suite("assoc", b));
  return o;
}

Outcome weyl_suite() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 4;
  b.power_max = 5;
  absorb(o, run_suite("weyl", b));
  b.power_max = 6;
  absorb(o, run_suite("swib0", b));
  return o;
}

Outcome branching_suite() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 3;
  b.power_max = 6;  // components of B^(x)N for N <= 5
  absorb(o, run_suite("branching", b));
  const Alphabet a(3);
  for (int power = 1; power <= 5; ++power) {
    for (const Component& c : components(build_tensor_power(a, power))) {
      produced.push_back(c.graph);
      for (const BranchPiece& p : branch(c)) produced.push_back(p.component.graph);
    }
  }
  return o;
}

Outcome counting() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 3;
  b.power_max = 6;
  absorb(o, run_suite("counts", b));
  const Alphabet a(3);
  const auto t3 = multiplicity_table(a, 3);
  o.require(t3.size() == 2 && t3.at(StrictPartition({3})).count == 1 &&
                t3.at(StrictPartition({2, 1})).count == 1,
            "N=3 table");
  const auto t4 = multiplicity_table(a, 4);
  o.require(t4.size() == 2, "N=4 shapes");
  if (t4.size() == 2) {
    const auto& m4 = t4.at(StrictPartition({4}));
    const auto& m31 = t4.at(StrictPartition({3, 1}));
    o.require(m4.count == 1 && m31.count == 2, "N=4 multiplicities");
    o.require(m31.component_size == 24, "s31 = " + std::to_string(m31.component_size));
    o.require(m4.component_size + 2 * m31.component_size == 81, "s4 + 2 s31 != 81");
    const Component direct = highest_weight_crystal(StrictPartition({4}), a);
    produced.push_back(direct.graph);
    o.require(direct.size() == 33 && m4.component_size == 33, "s4 = 33 by direct build");
  }
  for (int power = 0; power <= 6; ++power) produced.push_back(build_tensor_power(a, power));
  return o;
}

Outcome reading_independence() {
  Outcome o;
  VerifyBounds b;
  b.n_max = 4;
  b.shape_max = 6;
  absorb(o, run_suite("reading", b));
  for (int n = 2; n <= 4; ++n) {
    for (int size = 1; size <= 6; ++size) {
      for (const StrictPartition& shape : strict_partitions_of(size)) {
        for (auto style : {ReadingStyle::middle_eastern, ReadingStyle::far_eastern}) {
          produced.push_back(build_tableau_crystal(shape, Alphabet(n), style));
        }
      }
    }
  }
  return o;
}

Outcome disconnection() {
  Outcome o;
  int code = 0;
  const std::string stats = cli_stdout({"tableaux", "--shape", "4", "--n", "3", "--stats"}, code);
  o.require(code == kExitOk, "exit code " + std::to_string(code));
  o.require(stats.find("nodes=81\n") != std::string::npos, "node count");
  const auto at = stats.find("components=");
  const int comps = at == std::string::npos ? 0 : std::stoi(stats.substr(at + 11));
  o.require(comps >= 2, "components=" + std::to_string(comps));
  if (o.ok) o.detail = "nodes=81 components=" + std::to_string(comps);
  produced.push_back(build_tableau_crystal(StrictPartition({4}), Alphabet(3),
                                           ReadingStyle::middle_eastern));
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::size_t checked = 0;
  for (const CrystalGraph& g : produced) {
    const CrystalGraph back = parse_graph(serialize_graph(g, GraphFormat::json));
    o.require(back == g, "round trip differs for a graph of " + std::to_string(g.size()) + " nodes");
    ++checked;
  }
  o.require(checked > 0, "no graphs collected");
  if (o.ok) o.detail = std::to_string(checked) + " graphs";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "B (x) B graph, n = 3", 1, tensor_square},
      {2, "tableau crystal of shape (3,1), n = 3", 1, tableaux_31},
      {3, "odd nilpotency", 5, nilpotency},
      {4, "highest weight characterization", 60, characterization},
      {5, "tensor associativity", 10, associativity},
      {6, "Weyl operators and S_{w_i} b0 closed forms", 30, weyl_suite},
      {7, "branching rule", 60, branching_suite},
      {8, "multiplicities vs shifted SYT", 60, counting},
      {9, "reading independence", 60, reading_independence},
      {10, "disconnection witness", 1, disconnection},
      {11, "serialization round trip", 0, round_trip},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += " (over time limit)";
    }
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing
              << "): " << o.detail << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}

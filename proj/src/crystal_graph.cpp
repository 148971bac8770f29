#include "qcrystal/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <thread>

#include "qcrystal/weyl.hpp"

namespace qcrystal {

BudgetExceeded::BudgetExceeded(std::size_t requested, std::size_t budget)
    : std::runtime_error("node budget exceeded: " + std::to_string(requested) + " > " +
                         std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

namespace {

std::vector<Edge> edges_for_range(const std::vector<Word>& nodes, std::size_t first,
                                  std::size_t last, Alphabet a) {
  std::vector<Edge> out;
  const int slots = OperatorLabel::slot_count(a);
  for (std::size_t k = first; k < last; ++k) {
    for (int s = 0; s < slots; ++s) {
      const OperatorLabel label = OperatorLabel::from_slot(s, a);
      auto image = apply(nodes[k], label, Direction::lower, a);
      if (!image) continue;
      auto it = std::lower_bound(nodes.begin(), nodes.end(), *image);
      if (it == nodes.end() || *it != *image) {
        throw std::logic_error("arrow " + label.token() + " from " + nodes[k].to_string() +
                               " leaves the node set (" + image->to_string() + ")");
      }
      out.push_back(Edge{k, label, static_cast<std::size_t>(it - nodes.begin())});
    }
  }
  return out;
}

}  // namespace

CrystalGraph CrystalGraph::from_words(std::vector<Word> words, Alphabet a, unsigned workers) {
  for (const Word& w : words) w.validate(a);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  CrystalGraph g(a);
  g.nodes_ = std::move(words);
  g.weights_.reserve(g.nodes_.size());
  for (const Word& w : g.nodes_) g.weights_.push_back(weight(w, a));

  const std::size_t total = g.nodes_.size();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total / 1024 + 1)));
  if (workers == 1) {
    g.edges_ = edges_for_range(g.nodes_, 0, total, a);
  } else {
    std::vector<std::vector<Edge>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          try {
            parts[t] = edges_for_range(g.nodes_, total * t / workers, total * (t + 1) / workers, a);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& p : parts) g.edges_.insert(g.edges_.end(), p.begin(), p.end());
  }
  g.index_edges();
  return g;
}

CrystalGraph::CrystalGraph(Alphabet a, std::vector<Word> nodes, std::vector<Edge> edges)
    : alphabet_(a), slots_(OperatorLabel::slot_count(a)), nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    nodes_[k].validate(a);
    if (k > 0 && !(nodes_[k - 1] < nodes_[k])) {
      throw std::invalid_argument("nodes not strictly sorted at index " + std::to_string(k));
    }
    weights_.push_back(weight(nodes_[k], a));
  }
  for (const Edge& e : edges_) {
    e.label.validate(a);
    if (e.src >= nodes_.size() || e.dst >= nodes_.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    const Weight root = Weight::simple_root(a.rank(), e.label.index());
    if (weights_[e.dst] != weights_[e.src] - root) {
      throw std::invalid_argument("edge " + nodes_[e.src].to_string() + " -" + e.label.token() +
                                  "-> " + nodes_[e.dst].to_string() + " breaks the weight rule");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [&](const Edge& x, const Edge& y) {
    return std::pair(x.src, x.label.slot(a)) < std::pair(y.src, y.label.slot(a));
  });
  index_edges();
}

void CrystalGraph::index_edges() {
  lower_.assign(nodes_.size() * slots_, npos);
  raise_.assign(nodes_.size() * slots_, npos);
  for (const Edge& e : edges_) {
    const int s = e.label.slot(alphabet_);
    auto& out = lower_[e.src * slots_ + s];
    auto& in = raise_[e.dst * slots_ + s];
    if (out != npos || in != npos) {
      throw std::invalid_argument("label " + e.label.token() + " is not a partial injection at " +
                                  nodes_[e.src].to_string());
    }
    out = e.dst;
    in = e.src;
  }
}

std::optional<std::size_t> CrystalGraph::find(const Word& w) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), w);
  if (it == nodes_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

CrystalGraph CrystalGraph::induced(const std::vector<std::size_t>& ids) const {
  std::vector<std::size_t> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::size_t> remap(nodes_.size(), npos);
  CrystalGraph sub(alphabet_);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    remap[sorted[k]] = k;
    sub.nodes_.push_back(nodes_[sorted[k]]);
    sub.weights_.push_back(weights_[sorted[k]]);
  }
  for (const Edge& e : edges_) {
    if (remap[e.src] != npos && remap[e.dst] != npos) {
      sub.edges_.push_back(Edge{remap[e.src], e.label, remap[e.dst]});
    }
  }
  sub.index_edges();
  return sub;
}

std::size_t Component::unique_hw() const {
  if (hw_nodes.size() != 1) {
    throw std::invalid_argument("component has " + std::to_string(hw_nodes.size()) +
                                " highest weight nodes, expected exactly one");
  }
  return hw_nodes.front();
}

CrystalGraph build_tensor_power(Alphabet a, int power, std::size_t budget, unsigned workers) {
  if (power < 0) throw std::invalid_argument("tensor power must be >= 0");
  std::size_t count = 1;
  const auto n = static_cast<std::size_t>(a.rank());
  for (int k = 0; k < power; ++k) {
    if (count > budget / n) throw BudgetExceeded(count * n, budget);
    count *= n;
  }

  // Odometer enumeration already yields lexicographic order.
  std::vector<Word> words;
  words.reserve(count);
  std::vector<Letter> cur(power, 1);
  for (std::size_t k = 0; k < count; ++k) {
    words.emplace_back(cur);
    for (int p = power - 1; p >= 0; --p) {
      if (cur[p] < a.rank()) {
        ++cur[p];
        break;
      }
      cur[p] = 1;
    }
  }
  return CrystalGraph::from_words(std::move(words), a, workers);
}

namespace {

std::vector<std::size_t> hw_nodes_of(const CrystalGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (is_highest_weight(g.node(k), g.alphabet())) out.push_back(k);
  }
  return out;
}

Component make_component(CrystalGraph graph) {
  Component c{std::move(graph), {}};
  c.hw_nodes = hw_nodes_of(c.graph);
  return c;
}

const Weight& sort_weight(const Component& c) {
  return c.hw_nodes.empty() ? c.graph.weight_of(0) : c.graph.weight_of(c.hw_nodes.front());
}

}  // namespace

std::vector<Component> components(const CrystalGraph& g) {
  // union-find over stored arrows
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    auto r1 = root(e.src);
    auto r2 = root(e.dst);
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < g.size(); ++k) classes[root(k)].push_back(k);

  std::vector<Component> out;
  out.reserve(classes.size());
  for (auto& [r, ids] : classes) out.push_back(make_component(g.induced(ids)));
  std::stable_sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    const Weight& wx = sort_weight(x);
    const Weight& wy = sort_weight(y);
    if (wx != wy) return wx > wy;
    if (x.size() != y.size()) return x.size() < y.size();
    return x.graph.node(0) < y.graph.node(0);
  });
  return out;
}

Component component_of(const Word& seed, Alphabet a, std::size_t budget) {
  seed.validate(a);
  std::set<Word> seen{seed};
  std::deque<Word> queue{seed};
  const int slots = OperatorLabel::slot_count(a);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (int s = 0; s < slots; ++s) {
      for (Direction d : {Direction::lower, Direction::raise}) {
        auto next = apply(cur, OperatorLabel::from_slot(s, a), d, a);
        if (next && seen.insert(*next).second) {
          if (seen.size() > budget) throw BudgetExceeded(seen.size(), budget);
          queue.push_back(std::move(*next));
        }
      }
    }
  }
  return make_component(
      CrystalGraph::from_words(std::vector<Word>(seen.begin(), seen.end()), a));
}

CanonicalCode canonical_form(const Component& c) {
  const std::size_t start = c.unique_hw();
  const CrystalGraph& g = c.graph;
  const int slots = g.slots();

  CanonicalCode code;
  code.rank = g.alphabet().rank();
  std::vector<std::size_t> label(g.size(), CrystalGraph::npos);
  std::vector<std::size_t> order{start};
  label[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t k = order[head];
    for (int pass = 0; pass < 2; ++pass) {
      for (int s = 0; s < slots; ++s) {
        const std::size_t next = pass == 0 ? g.lower(k, s) : g.raise(k, s);
        if (next != CrystalGraph::npos && label[next] == CrystalGraph::npos) {
          label[next] = order.size();
          order.push_back(next);
        }
      }
    }
  }
  if (order.size() != g.size()) {
    throw std::invalid_argument("canonical_form: component is not connected");
  }
  for (std::size_t k : order) code.weights.push_back(g.weight_of(k));
  for (const Edge& e : g.edges()) {
    code.arrows.push_back({label[e.src], e.label.slot(g.alphabet()), label[e.dst]});
  }
  std::sort(code.arrows.begin(), code.arrows.end());
  return code;
}

std::vector<BranchPiece> branch(const Component& c) {
  const Alphabet a = c.graph.alphabet();
  const Weight& hw = c.hw_weight();
  if (!hw.is_strict_partition()) {
    throw std::invalid_argument("branch: highest weight " + hw.to_string() + " is not strict");
  }
  std::vector<Word> words;
  words.reserve(c.size() * a.rank());
  for (int x = 1; x <= a.rank(); ++x) {
    const Word head{x};
    for (const Word& w : c.graph.nodes()) words.push_back(head + w);
  }
  const CrystalGraph product = CrystalGraph::from_words(std::move(words), a);

  std::vector<BranchPiece> out;
  for (Component& piece : components(product)) {
    StrictPartition shape = StrictPartition::from_weight(piece.hw_weight());
    out.push_back(BranchPiece{std::move(shape), std::move(piece)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BranchPiece& x, const BranchPiece& y) { return x.shape > y.shape; });
  return out;
}

Component highest_weight_crystal(const StrictPartition& shape, Alphabet a) {
  const Word seed = reading(highest_tableau(shape, a), ReadingStyle::middle_eastern);
  return component_of(seed, a);
}

std::map<StrictPartition, Multiplicity> multiplicity_table(Alphabet a, int power,
                                                           std::size_t budget) {
  std::map<StrictPartition, Multiplicity> table;
  if (power == 0) return table;
  const CrystalGraph g = build_tensor_power(a, power, budget);
  for (const Component& c : components(g)) {
    StrictPartition shape = StrictPartition::from_weight(c.hw_weight());
    Multiplicity& m = table[shape];
    if (m.count > 0 && m.component_size != c.size()) {
      throw std::logic_error("components of highest weight " + shape.to_string() +
                             " differ in size");
    }
    ++m.count;
    m.component_size = c.size();
  }
  return table;
}

}  // namespace qcrystal

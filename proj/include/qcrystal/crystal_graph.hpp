#pragma once

// Materialized crystal graphs: nodes are words sorted lexicographically,
// edges are lowering arrows labelled 1..n-1 and 1bar.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcrystal/crystal_core.hpp"
#include "qcrystal/shifted_tableaux.hpp"

namespace qcrystal {

inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t requested, std::size_t budget);
  std::size_t requested() const { return requested_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

struct Edge {
  std::size_t src;
  OperatorLabel label;
  std::size_t dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class CrystalGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Sorts and deduplicates `words`, then adds every lowering arrow.  Throws
  /// std::logic_error if an arrow leaves the node set.
  static CrystalGraph from_words(std::vector<Word> words, Alphabet a, unsigned workers = 1);

  /// Explicit construction; validates sortedness, letters, edge weights and
  /// the partial-injection property.  Throws std::invalid_argument.
  CrystalGraph(Alphabet a, std::vector<Word> nodes, std::vector<Edge> edges);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Word>& nodes() const { return nodes_; }
  const Word& node(std::size_t k) const { return nodes_.at(k); }
  const Weight& weight_of(std::size_t k) const { return weights_.at(k); }
  /// Sorted by (src, label slot).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Target of the lowering (resp. raising) arrow with the given label slot, or npos.
  std::size_t lower(std::size_t k, int slot) const { return lower_[k * slots_ + slot]; }
  std::size_t raise(std::size_t k, int slot) const { return raise_[k * slots_ + slot]; }
  int slots() const { return slots_; }

  std::optional<std::size_t> find(const Word& w) const;
  /// Subgraph on the given node ids (any order); edges with both ends inside.
  CrystalGraph induced(const std::vector<std::size_t>& ids) const;

  friend bool operator==(const CrystalGraph& x, const CrystalGraph& y) {
    return x.alphabet_ == y.alphabet_ && x.nodes_ == y.nodes_ && x.edges_ == y.edges_;
  }

 private:
  CrystalGraph(Alphabet a) : alphabet_(a), slots_(OperatorLabel::slot_count(a)) {}
  void index_edges();

  Alphabet alphabet_;
  int slots_;
  std::vector<Word> nodes_;
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> lower_;
  std::vector<std::size_t> raise_;
};

/// Connected class of a crystal graph together with its highest weight nodes.
struct Component {
  CrystalGraph graph;
  std::vector<std::size_t> hw_nodes;

  std::size_t size() const { return graph.size(); }
  /// Requires exactly one highest weight node.
  std::size_t unique_hw() const;
  const Word& hw_word() const { return graph.node(unique_hw()); }
  const Weight& hw_weight() const { return graph.weight_of(unique_hw()); }
};

/// All n^power words.  Throws BudgetExceeded when n^power > budget.
CrystalGraph build_tensor_power(Alphabet a, int power, std::size_t budget = kDefaultNodeBudget,
                                unsigned workers = 1);

/// Connected classes under the stored labels (both directions), each with its
/// highest weight nodes; sorted by hw weight descending, then size, then first word.
std::vector<Component> components(const CrystalGraph& g);

/// The connected component of B^{(x)N} containing `seed`, found by search.
Component component_of(const Word& seed, Alphabet a, std::size_t budget = kDefaultNodeBudget);

/// Breadth-first relabelling from the unique highest weight node.
struct CanonicalCode {
  int rank = 0;
  std::vector<Weight> weights;  ///< by discovery index
  struct Arrow {
    std::size_t src;
    int slot;
    std::size_t dst;
    friend bool operator==(const Arrow&, const Arrow&) = default;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
  };
  std::vector<Arrow> arrows;  ///< sorted

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Throws std::invalid_argument unless the component has exactly one hw node.
CanonicalCode canonical_form(const Component& c);

struct BranchPiece {
  StrictPartition shape;
  Component component;
};

/// Decomposes B (x) C for a component C with a unique highest weight node of
/// strict weight.  Pieces are sorted by shape descending.
std::vector<BranchPiece> branch(const Component& c);

/// B(lambda) built independently of any tensor power decomposition: the
/// component of B^{(x)|lambda|} through the reading of the highest tableau.
Component highest_weight_crystal(const StrictPartition& shape, Alphabet a);

struct Multiplicity {
  std::size_t count = 0;
  std::size_t component_size = 0;
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// Highest weight census of B^{(x)power}.  Throws std::logic_error if two
/// components with the same highest weight differ in size.
std::map<StrictPartition, Multiplicity> multiplicity_table(Alphabet a, int power,
                                                           std::size_t budget = kDefaultNodeBudget);

}  // namespace qcrystal

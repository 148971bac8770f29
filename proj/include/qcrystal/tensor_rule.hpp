#pragma once

// Operators on a word computed through an explicit bracketing of its factors,
// applying only the two-factor tensor product rule at each internal node.
// Leaf segments are evaluated with the direct operators of crystal_core; with
// single-letter leaves the result is independent of the signature rule.

#include <optional>
#include <vector>

#include "qcrystal/crystal_core.hpp"

namespace qcrystal {

class Bracketing {
 public:
  /// One factor made of `length` letters, evaluated directly.
  static Bracketing segment(std::size_t length);
  static Bracketing join(const Bracketing& left, const Bracketing& right);
  /// b_1 (x) (b_2 (x) (... (x) b_N)) with single-letter leaves.
  static Bracketing letters_right(std::size_t length);
  /// ((b_1 (x) b_2) (x) ...) (x) b_N with single-letter leaves.
  static Bracketing letters_left(std::size_t length);

  std::size_t length() const { return nodes_.empty() ? 0 : nodes_[root_].length; }

 private:
  friend struct BracketingEval;
  struct Node {
    std::size_t length = 0;
    int left = -1;
    int right = -1;
  };
  int append(const Bracketing& other);
  std::vector<Node> nodes_;
  int root_ = 0;
};

int eps_bracketed(const Word& w, const Bracketing& br, int i, Alphabet a);
int phi_bracketed(const Word& w, const Bracketing& br, int i, Alphabet a);
std::optional<Word> apply_bracketed(const Word& w, const Bracketing& br, OperatorLabel label,
                                    Direction dir, Alphabet a);

}  // namespace qcrystal

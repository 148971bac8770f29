#include "qcrystal/tensor_rule.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcrystal {

Bracketing Bracketing::segment(std::size_t length) {
  Bracketing b;
  b.nodes_.push_back(Node{length, -1, -1});
  return b;
}

int Bracketing::append(const Bracketing& other) {
  const int offset = static_cast<int>(nodes_.size());
  for (Node node : other.nodes_) {
    if (node.left >= 0) node.left += offset;
    if (node.right >= 0) node.right += offset;
    nodes_.push_back(node);
  }
  return other.root_ + offset;
}

Bracketing Bracketing::join(const Bracketing& left, const Bracketing& right) {
  Bracketing b;
  const int l = b.append(left);
  const int r = b.append(right);
  b.nodes_.push_back(Node{left.length() + right.length(), l, r});
  b.root_ = static_cast<int>(b.nodes_.size()) - 1;
  return b;
}

Bracketing Bracketing::letters_right(std::size_t length) {
  if (length == 0) return segment(0);
  Bracketing b = segment(1);
  for (std::size_t k = 1; k < length; ++k) b = join(segment(1), b);
  return b;
}

Bracketing Bracketing::letters_left(std::size_t length) {
  if (length == 0) return segment(0);
  Bracketing b = segment(1);
  for (std::size_t k = 1; k < length; ++k) b = join(b, segment(1));
  return b;
}

struct BracketingEval {
  const Word& word;
  const Bracketing& br;
  Alphabet alphabet;

  static int root_of(const Bracketing& b) { return b.root_; }
  const Bracketing::Node& node(int id) const { return br.nodes_[id]; }
  bool leaf(int id) const { return node(id).left < 0; }
  Word segment_word(int id, std::size_t offset) const { return word.slice(offset, node(id).length); }

  int eps_at(int id, std::size_t offset, int i) const {
    if (leaf(id)) return eps(segment_word(id, offset), i, alphabet);
    const auto& nd = node(id);
    const std::size_t mid = offset + node(nd.left).length;
    const int e1 = eps_at(nd.left, offset, i);
    const int p1 = phi_at(nd.left, offset, i);
    const int e2 = eps_at(nd.right, mid, i);
    return e1 + std::max(0, e2 - p1);
  }

  int phi_at(int id, std::size_t offset, int i) const {
    if (leaf(id)) return phi(segment_word(id, offset), i, alphabet);
    const auto& nd = node(id);
    const std::size_t mid = offset + node(nd.left).length;
    const int p1 = phi_at(nd.left, offset, i);
    const int e2 = eps_at(nd.right, mid, i);
    const int p2 = phi_at(nd.right, mid, i);
    return p2 + std::max(0, p1 - e2);
  }

  // <k_1, wt> = <k_2, wt> = 0 on the subtree
  bool free_of_one_two(int id, std::size_t offset) const {
    for (std::size_t k = offset; k < offset + node(id).length; ++k) {
      if (word[k] == 1 || word[k] == 2) return false;
    }
    return true;
  }

  // Returns the modified word, or nullopt for 0.
  std::optional<Word> act(int id, std::size_t offset, OperatorLabel label, Direction dir) const {
    if (leaf(id)) {
      auto image = apply(segment_word(id, offset), label, dir, alphabet);
      if (!image) return std::nullopt;
      Word out = word;
      for (std::size_t k = 0; k < image->size(); ++k) out = out.with(offset + k, (*image)[k]);
      return out;
    }
    const auto& nd = node(id);
    const std::size_t mid = offset + node(nd.left).length;
    bool on_left;
    if (label.is_odd()) {
      on_left = free_of_one_two(nd.right, mid);
    } else {
      const int i = label.index();
      const int p1 = phi_at(nd.left, offset, i);
      const int e2 = eps_at(nd.right, mid, i);
      on_left = dir == Direction::raise ? p1 >= e2 : p1 > e2;
    }
    return on_left ? act(nd.left, offset, label, dir) : act(nd.right, mid, label, dir);
  }
};

namespace {
void check_length(const Word& w, const Bracketing& br) {
  if (w.size() != br.length()) throw std::invalid_argument("bracketing length does not match word");
}
}  // namespace

int eps_bracketed(const Word& w, const Bracketing& br, int i, Alphabet a) {
  check_length(w, br);
  if (!a.valid_index(i)) throw std::out_of_range("operator index out of range");
  return BracketingEval{w, br, a}.eps_at(BracketingEval::root_of(br), 0, i);
}

int phi_bracketed(const Word& w, const Bracketing& br, int i, Alphabet a) {
  check_length(w, br);
  if (!a.valid_index(i)) throw std::out_of_range("operator index out of range");
  return BracketingEval{w, br, a}.phi_at(BracketingEval::root_of(br), 0, i);
}

std::optional<Word> apply_bracketed(const Word& w, const Bracketing& br, OperatorLabel label,
                                    Direction dir, Alphabet a) {
  check_length(w, br);
  label.validate(a);
  return BracketingEval{w, br, a}.act(BracketingEval::root_of(br), 0, label, dir);
}

}  // namespace qcrystal

#pragma once

// Letters, tensor words, weights and the crystal operators of the
// q(n)-crystal B^{(x)N}.
//
// A word (b_1, ..., b_N) stands for b_1 (x) ... (x) b_N.  The tensor product
// convention: e_i(b1 (x) b2) acts on b1 iff phi_i(b1) >= eps_i(b2).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcrystal {

using Letter = std::uint8_t;

/// Rank parameter n >= 2.  Letters are 1..n, even operator indices 1..n-1.
class Alphabet {
 public:
  explicit Alphabet(int n);

  int rank() const { return n_; }
  bool valid_letter(int x) const { return x >= 1 && x <= n_; }
  bool valid_index(int i) const { return i >= 1 && i <= n_ - 1; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  int n_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  std::span<const Letter> letters() const { return letters_; }

  /// Returns a copy with position k replaced by x.
  Word with(std::size_t k, Letter x) const;
  /// Concatenation u (x) v.
  Word operator+(const Word& other) const;
  /// Sub-word of positions [first, first+count).
  Word slice(std::size_t first, std::size_t count) const;

  /// Throws std::invalid_argument if some letter is outside 1..n.
  void validate(Alphabet a) const;

  /// "1⊗2⊗1" (or "∅" for the empty word).
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// mu = sum coords[j-1] eps_j.  k(j) = <k_j, mu>, h(i) = <h_i, mu>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }
  /// eps_j, 1-indexed.
  static Weight unit(int n, int j);
  /// alpha_i = eps_i - eps_{i+1}.
  static Weight simple_root(int n, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int k(int j) const { return coords_.at(j - 1); }
  int h(int i) const { return k(i) - k(i + 1); }
  int total() const;
  const std::vector<int>& coords() const { return coords_; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  /// Action of the simple reflection s_i (swap coordinates i, i+1).
  Weight reflect(int i) const;

  /// Partition in the sense of dominant weights: weakly decreasing, >= 0.
  bool is_partition() const;
  /// Element of Lambda^+: decreasing, and lambda_i = lambda_{i+1} only when both are 0.
  bool is_strict_partition() const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coords_;
};

/// Arrow label: Even(i) for 1 <= i <= n-1, or the odd label 1bar.
class OperatorLabel {
 public:
  enum class Kind : std::uint8_t { even, odd_one };

  static OperatorLabel even(int i) { return OperatorLabel(Kind::even, i); }
  static OperatorLabel odd_one() { return OperatorLabel(Kind::odd_one, 1); }

  Kind kind() const { return kind_; }
  bool is_odd() const { return kind_ == Kind::odd_one; }
  int index() const { return index_; }

  /// Labels are indexed 0..n-1: Even(i) -> i-1, 1bar -> n-1.
  int slot(Alphabet a) const;
  static OperatorLabel from_slot(int slot, Alphabet a);
  static int slot_count(Alphabet a) { return a.rank(); }

  void validate(Alphabet a) const;

  /// "1".."n-1" or "1bar".
  std::string token() const;
  static OperatorLabel parse_token(const std::string& token);

  friend bool operator==(const OperatorLabel&, const OperatorLabel&) = default;
  friend auto operator<=>(const OperatorLabel&, const OperatorLabel&) = default;

 private:
  OperatorLabel(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

enum class Direction : std::uint8_t { raise, lower };

Weight weight(const Word& w, Alphabet a);

// Even operators, signature rule: letter i is '+', letter i+1 is '-', adjacent
// "+-" pairs cancel.  eps = unmatched '-', phi = unmatched '+'.
int eps(const Word& w, int i, Alphabet a);
int phi(const Word& w, int i, Alphabet a);
/// Leftmost unmatched i becomes i+1.
std::optional<Word> f_even(const Word& w, int i, Alphabet a);
/// Rightmost unmatched i+1 becomes i.
std::optional<Word> e_even(const Word& w, int i, Alphabet a);

// Odd operators: act on the last position holding 1 or 2.
std::optional<Word> f_odd1(const Word& w);
std::optional<Word> e_odd1(const Word& w);

std::optional<Word> apply(const Word& w, OperatorLabel label, Direction dir, Alphabet a);

/// Position of the last letter in {1, 2}, if any.
std::optional<std::size_t> last_one_or_two(const Word& w);

}  // namespace qcrystal

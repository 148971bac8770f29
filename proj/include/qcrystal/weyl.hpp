#pragma once

// Weyl group action S_w on tensor words, the conjugated odd operators
// e_{ibar} = S_{w_i}^{-1} e_{1bar} S_{w_i}, and highest weight predicates.

#include <optional>
#include <vector>

#include "qcrystal/crystal_core.hpp"

namespace qcrystal {

/// s_{a_1} s_{a_2} ... s_{a_k}; as an operator the rightmost factor acts first.
struct WeylWord {
  std::vector<int> factors;

  WeylWord inverse() const;
  WeylWord operator*(const WeylWord& right) const;
  void validate(Alphabet a) const;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// w_i = s_2 ... s_i s_1 ... s_{i-1}; the identity for i = 1.
WeylWord w_elem(int i);
/// z_i = s_3 s_4 ... s_{i+1}; the identity for i = 1.
WeylWord z_elem(int i);
/// u_i = z_i w_i.
WeylWord u_elem(int i);

/// S_i: reverses the unmatched part of the i-signature, i.e. f_i^h or e_i^{-h}
/// with h = <h_i, wt w>.
Word s_action(const Word& w, int i, Alphabet a);
Word weyl_action(const Word& w, const WeylWord& ww, Alphabet a);
/// Weight action of a Weyl word, rightmost factor first.
Weight weyl_action(const Weight& mu, const WeylWord& ww);

std::optional<Word> e_odd(const Word& w, int i, Alphabet a);
std::optional<Word> f_odd(const Word& w, int i, Alphabet a);

/// e_i w = 0 for 1 <= i < rank.
bool is_gl_highest(const Word& w, int rank, Alphabet a);
/// e_i w = e_{ibar} w = 0 for 1 <= i < rank.
bool is_q_highest(const Word& w, int rank, Alphabet a);
inline bool is_highest_weight(const Word& w, Alphabet a) { return is_q_highest(w, a.rank(), a); }

/// f_1 f_2 ... f_{j-1} b (f_{j-1} acts first); nullopt if some step vanishes.
std::optional<Word> lower_chain(const Word& b, int j, Alphabet a);

/// {1 (x) f_1 ... f_{j-1} b : wt(b) + eps_j strict}, sorted.  Throws
/// std::invalid_argument if b is not a highest weight vector.
std::vector<Word> hw_recursion_candidates(const Word& b, Alphabet a);

}  // namespace qcrystal

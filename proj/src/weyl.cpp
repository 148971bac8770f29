#include "qcrystal/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcrystal {

WeylWord WeylWord::inverse() const {
  return WeylWord{std::vector<int>(factors.rbegin(), factors.rend())};
}

WeylWord WeylWord::operator*(const WeylWord& right) const {
  WeylWord out = *this;
  out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
  return out;
}

void WeylWord::validate(Alphabet a) const {
  for (int i : factors) {
    if (!a.valid_index(i)) {
      throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." +
                              std::to_string(a.rank() - 1));
    }
  }
}

WeylWord w_elem(int i) {
  WeylWord w;
  for (int k = 2; k <= i; ++k) w.factors.push_back(k);
  for (int k = 1; k <= i - 1; ++k) w.factors.push_back(k);
  return w;
}

WeylWord z_elem(int i) {
  WeylWord z;
  for (int k = 3; k <= i + 1; ++k) z.factors.push_back(k);
  return z;
}

WeylWord u_elem(int i) { return z_elem(i) * w_elem(i); }

Word s_action(const Word& w, int i, Alphabet a) {
  if (!a.valid_index(i)) throw std::out_of_range("reflection index out of range");
  const auto plus = static_cast<Letter>(i);
  const auto minus = static_cast<Letter>(i + 1);
  // Unmatched positions in increasing order: eps minuses then phi pluses.
  std::vector<std::size_t> unmatched;
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == plus) {
      open.push_back(k);
    } else if (w[k] == minus) {
      if (!open.empty()) {
        open.pop_back();
      } else {
        unmatched.push_back(k);
      }
    }
  }
  unmatched.insert(unmatched.end(), open.begin(), open.end());
  const std::size_t n_plus = open.size();

  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (std::size_t k = 0; k < unmatched.size(); ++k) {
    out[unmatched[k]] = k < n_plus ? minus : plus;
  }
  return Word(std::move(out));
}

Word weyl_action(const Word& w, const WeylWord& ww, Alphabet a) {
  ww.validate(a);
  Word out = w;
  for (auto it = ww.factors.rbegin(); it != ww.factors.rend(); ++it) out = s_action(out, *it, a);
  return out;
}

Weight weyl_action(const Weight& mu, const WeylWord& ww) {
  for (int i : ww.factors) {
    if (i < 1 || i >= mu.rank()) {
      throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." +
                              std::to_string(mu.rank() - 1));
    }
  }
  Weight out = mu;
  for (auto it = ww.factors.rbegin(); it != ww.factors.rend(); ++it) out = out.reflect(*it);
  return out;
}

namespace {

template <class Op>
std::optional<Word> conjugated(const Word& w, int i, Alphabet a, Op odd_one) {
  if (!a.valid_index(i)) throw std::out_of_range("odd operator index out of range");
  if (i == 1) return odd_one(w);
  const WeylWord wi = w_elem(i);
  auto moved = odd_one(weyl_action(w, wi, a));
  if (!moved) return std::nullopt;
  return weyl_action(*moved, wi.inverse(), a);
}

}  // namespace

std::optional<Word> e_odd(const Word& w, int i, Alphabet a) {
  return conjugated(w, i, a, [](const Word& x) { return e_odd1(x); });
}

std::optional<Word> f_odd(const Word& w, int i, Alphabet a) {
  return conjugated(w, i, a, [](const Word& x) { return f_odd1(x); });
}

namespace {
void check_rank(int rank, Alphabet a) {
  if (rank < 2 || rank > a.rank()) {
    throw std::out_of_range("highest weight rank " + std::to_string(rank) + " outside 2.." +
                            std::to_string(a.rank()));
  }
}
}  // namespace

bool is_gl_highest(const Word& w, int rank, Alphabet a) {
  check_rank(rank, a);
  for (int i = 1; i < rank; ++i) {
    if (eps(w, i, a) != 0) return false;
  }
  return true;
}

bool is_q_highest(const Word& w, int rank, Alphabet a) {
  if (!is_gl_highest(w, rank, a)) return false;
  for (int i = 1; i < rank; ++i) {
    if (e_odd(w, i, a)) return false;
  }
  return true;
}

std::optional<Word> lower_chain(const Word& b, int j, Alphabet a) {
  if (j < 1 || j > a.rank()) throw std::out_of_range("chain index out of range");
  std::optional<Word> cur = b;
  for (int i = j - 1; i >= 1 && cur; --i) cur = f_even(*cur, i, a);
  return cur;
}

std::vector<Word> hw_recursion_candidates(const Word& b, Alphabet a) {
  b.validate(a);
  if (!is_highest_weight(b, a)) {
    throw std::invalid_argument("hw_recursion_candidates: " + b.to_string() +
                                " is not a highest weight vector");
  }
  const Weight wt = weight(b, a);
  std::vector<Word> out;
  for (int j = 1; j <= a.rank(); ++j) {
    if (!(wt + Weight::unit(a.rank(), j)).is_strict_partition()) continue;
    auto lowered = lower_chain(b, j, a);
    if (!lowered) {
      throw std::logic_error("f_1...f_{j-1} vanished on a highest weight vector");
    }
    out.push_back(Word{1} + *lowered);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcrystal

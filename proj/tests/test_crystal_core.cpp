#include <gtest/gtest.h>

#include "qcrystal/crystal_core.hpp"

using namespace qcrystal;

namespace {

const Alphabet n2(2);
const Alphabet n3(3);

std::vector<Word> all_words(Alphabet a, int length) {
  std::vector<Word> out{Word{}};
  for (int k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const Word& w : out) {
      for (int x = 1; x <= a.rank(); ++x) next.push_back(w + Word{x});
    }
    out = std::move(next);
  }
  return out;
}

// eps/phi by iterating the two-factor rule letter by letter.
std::pair<int, int> eps_phi_by_factors(const Word& w, int i) {
  int e = 0;
  int p = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int e2 = w[k] == i + 1 ? 1 : 0;
    const int p2 = w[k] == i ? 1 : 0;
    const int e_new = e + std::max(0, e2 - p);
    const int p_new = p2 + std::max(0, p - e2);
    e = e_new;
    p = p_new;
  }
  return {e, p};
}

}  // namespace

TEST(Alphabet, RejectsTooSmall) {
  EXPECT_THROW(Alphabet(1), std::invalid_argument);
  EXPECT_THROW(Alphabet(0), std::invalid_argument);
  EXPECT_NO_THROW(Alphabet(2));
}

TEST(Word, PrintsTensorProduct) {
  EXPECT_EQ(Word({1, 2, 1}).to_string(), "1⊗2⊗1");
  EXPECT_EQ(Word{}.to_string(), "∅");
  EXPECT_EQ(Word({1}) + Word({3, 2}), Word({1, 3, 2}));
  EXPECT_THROW(Word({1, 4}).validate(n3), std::invalid_argument);
}

TEST(Weight, CountsLetters) {
  EXPECT_EQ(weight(Word{1, 2, 2}, n3), Weight({1, 2, 0}));
  EXPECT_EQ(weight(Word{}, n3), Weight::zero(3));
  EXPECT_EQ(weight(Word{1, 2, 1, 1}, n3), Weight({3, 1, 0}));
}

TEST(Weight, StrictPartitions) {
  EXPECT_TRUE(Weight({3, 1, 0}).is_strict_partition());
  EXPECT_TRUE(Weight({2, 0, 0}).is_strict_partition());
  EXPECT_FALSE(Weight({2, 2, 0}).is_strict_partition());
  EXPECT_FALSE(Weight({2, 0, 1}).is_strict_partition());
  EXPECT_TRUE(Weight({2, 2, 0}).is_partition());
  EXPECT_FALSE(Weight({2, 0, 1}).is_partition());
  EXPECT_EQ(Weight({3, 1, 0}).reflect(2), Weight({3, 0, 1}));
}

TEST(Signature, Examples) {
  EXPECT_EQ(eps(Word{1, 2}, 1, n3), 0);
  EXPECT_EQ(phi(Word{1, 2}, 1, n3), 0);
  EXPECT_EQ(eps(Word{2, 1}, 1, n3), 1);
  EXPECT_EQ(phi(Word{2, 1}, 1, n3), 1);
  EXPECT_EQ(eps(Word{1, 1}, 1, n3), 0);
  EXPECT_EQ(phi(Word{1, 1}, 1, n3), 2);
}

TEST(Signature, AgreesWithFactorRecursionAndIteration) {
  for (int len = 0; len <= 6; ++len) {
    for (const Word& w : all_words(n3, len)) {
      for (int i = 1; i <= 2; ++i) {
        const auto [e, p] = eps_phi_by_factors(w, i);
        EXPECT_EQ(eps(w, i, n3), e) << w.to_string();
        EXPECT_EQ(phi(w, i, n3), p) << w.to_string();

        int raised = 0;
        for (auto x = e_even(w, i, n3); x; x = e_even(*x, i, n3)) ++raised;
        int lowered = 0;
        for (auto x = f_even(w, i, n3); x; x = f_even(*x, i, n3)) ++lowered;
        EXPECT_EQ(raised, e);
        EXPECT_EQ(lowered, p);
        EXPECT_EQ(p - e, weight(w, n3).h(i));
      }
    }
  }
}

TEST(EvenOperators, ExampleArrows) {
  EXPECT_EQ(f_even(Word{1, 1}, 1, n3), Word({2, 1}));
  EXPECT_EQ(f_even(Word{2, 1}, 2, n3), Word({3, 1}));
  EXPECT_EQ(f_even(Word{1, 2}, 1, n3), std::nullopt);
  EXPECT_EQ(e_even(Word{2, 1}, 1, n3), Word({1, 1}));
}

TEST(EvenOperators, PartialInverseAndWeightShift) {
  for (int len = 0; len <= 5; ++len) {
    for (const Word& w : all_words(n3, len)) {
      for (int i = 1; i <= 2; ++i) {
        if (auto f = f_even(w, i, n3)) {
          EXPECT_EQ(e_even(*f, i, n3), w);
          EXPECT_EQ(weight(*f, n3), weight(w, n3) - Weight::simple_root(3, i));
        }
        if (auto e = e_even(w, i, n3)) EXPECT_EQ(f_even(*e, i, n3), w);
      }
    }
  }
}

TEST(OddOperators, ActOnLastOneOrTwo) {
  EXPECT_EQ(f_odd1(Word{1, 1}), Word({1, 2}));
  EXPECT_EQ(f_odd1(Word{1, 2}), std::nullopt);
  EXPECT_EQ(e_odd1(Word{1, 2}), Word({1, 1}));
  EXPECT_EQ(f_odd1(Word{1, 3}), Word({2, 3}));
  EXPECT_EQ(e_odd1(Word{3, 3}), std::nullopt);
  EXPECT_EQ(last_one_or_two(Word{2, 3, 1, 3}), 2u);
  EXPECT_EQ(last_one_or_two(Word{3}), std::nullopt);
}

TEST(OddOperators, PartialInverse) {
  for (int len = 0; len <= 5; ++len) {
    for (const Word& w : all_words(n3, len)) {
      if (auto f = f_odd1(w)) EXPECT_EQ(e_odd1(*f), w);
      if (auto e = e_odd1(w)) EXPECT_EQ(f_odd1(*e), w);
    }
  }
}

TEST(Apply, Dispatch) {
  EXPECT_EQ(apply(Word{1, 1}, OperatorLabel::even(1), Direction::lower, n3), Word({2, 1}));
  EXPECT_EQ(apply(Word{1, 1}, OperatorLabel::odd_one(), Direction::lower, n3), Word({1, 2}));
  for (int s = 0; s < OperatorLabel::slot_count(n3); ++s) {
    for (Direction d : {Direction::raise, Direction::lower}) {
      EXPECT_EQ(apply(Word{}, OperatorLabel::from_slot(s, n3), d, n3), std::nullopt);
    }
  }
  EXPECT_THROW(apply(Word{1}, OperatorLabel::even(2), Direction::lower, n2), std::out_of_range);
}

TEST(OperatorLabel, TokensAndSlots) {
  EXPECT_EQ(OperatorLabel::odd_one().token(), "1bar");
  EXPECT_EQ(OperatorLabel::even(2).token(), "2");
  EXPECT_EQ(OperatorLabel::parse_token("1bar"), OperatorLabel::odd_one());
  EXPECT_EQ(OperatorLabel::parse_token("3"), OperatorLabel::even(3));
  EXPECT_THROW(OperatorLabel::parse_token("0"), std::invalid_argument);
  EXPECT_THROW(OperatorLabel::parse_token("2bar"), std::invalid_argument);
  EXPECT_THROW(OperatorLabel::parse_token(""), std::invalid_argument);
  for (int s = 0; s < 3; ++s) EXPECT_EQ(OperatorLabel::from_slot(s, n3).slot(n3), s);
  EXPECT_EQ(OperatorLabel::odd_one().slot(n3), 2);
}

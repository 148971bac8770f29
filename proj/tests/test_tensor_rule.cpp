#include <gtest/gtest.h>

#include <random>

#include "qcrystal/tensor_rule.hpp"

using namespace qcrystal;

namespace {

const Alphabet n3(3);

std::vector<Bracketing> all_routes(std::size_t len) {
  std::vector<Bracketing> routes{Bracketing::segment(len), Bracketing::letters_left(len),
                                 Bracketing::letters_right(len)};
  for (std::size_t a = 0; a <= len; ++a) {
    for (std::size_t b = a; b <= len; ++b) {
      auto s1 = Bracketing::segment(a);
      auto s2 = Bracketing::segment(b - a);
      auto s3 = Bracketing::segment(len - b);
      routes.push_back(Bracketing::join(Bracketing::join(s1, s2), s3));
      routes.push_back(Bracketing::join(s1, Bracketing::join(s2, s3)));
    }
  }
  return routes;
}

}  // namespace

TEST(Bracketing, Lengths) {
  EXPECT_EQ(Bracketing::segment(4).length(), 4u);
  EXPECT_EQ(Bracketing::letters_left(5).length(), 5u);
  EXPECT_EQ(Bracketing::join(Bracketing::segment(2), Bracketing::letters_right(3)).length(), 5u);
  EXPECT_THROW(eps_bracketed(Word{1, 2}, Bracketing::segment(3), 1, n3), std::invalid_argument);
}

TEST(Bracketing, TwoFactorRuleOnExampleArrows) {
  const auto split = Bracketing::letters_left(2);
  EXPECT_EQ(apply_bracketed(Word{1, 1}, split, OperatorLabel::even(1), Direction::lower, n3),
            Word({2, 1}));
  EXPECT_EQ(apply_bracketed(Word{1, 1}, split, OperatorLabel::odd_one(), Direction::lower, n3),
            Word({1, 2}));
  EXPECT_EQ(apply_bracketed(Word{1, 3}, split, OperatorLabel::odd_one(), Direction::lower, n3),
            Word({2, 3}));
  EXPECT_EQ(apply_bracketed(Word{2, 1}, split, OperatorLabel::even(2), Direction::lower, n3),
            Word({3, 1}));
}

TEST(Bracketing, EveryRouteMatchesDirectOperators) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = trial % 8;
    std::vector<Letter> letters(len);
    for (auto& x : letters) x = static_cast<Letter>(letter(rng));
    const Word w(letters);
    for (const Bracketing& br : all_routes(len)) {
      for (int s = 0; s < 3; ++s) {
        const auto label = OperatorLabel::from_slot(s, n3);
        for (Direction d : {Direction::raise, Direction::lower}) {
          EXPECT_EQ(apply_bracketed(w, br, label, d, n3), apply(w, label, d, n3))
              << w.to_string() << " " << label.token();
        }
      }
      for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(eps_bracketed(w, br, i, n3), eps(w, i, n3));
        EXPECT_EQ(phi_bracketed(w, br, i, n3), phi(w, i, n3));
      }
    }
  }
}

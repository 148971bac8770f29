#include <gtest/gtest.h>

#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/shifted_tableaux.hpp"
#include "qcrystal/weyl.hpp"

using namespace qcrystal;

namespace {

const Alphabet n3(3);

ShiftedTableau tableau(const std::string& shape, std::vector<Letter> entries, Alphabet a = n3) {
  return ShiftedTableau(ShiftedDiagram(StrictPartition::parse(shape)), std::move(entries), a);
}

// 1/12/1: the top tableau of shape (3,1).
ShiftedTableau top31() { return tableau("3,1", {1, 1, 2, 1}); }

}  // namespace

TEST(StrictPartition, Parse) {
  EXPECT_EQ(StrictPartition::parse("3,1").parts(), (std::vector<int>{3, 1}));
  EXPECT_EQ(StrictPartition::parse("4").size(), 4);
  for (const char* bad : {"2,2", "1,3", "3,0", "", "3,", ",3", "a", "3,,1", "-1"}) {
    EXPECT_THROW(StrictPartition::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_EQ(StrictPartition::from_weight(Weight({3, 1, 0})), StrictPartition({3, 1}));
  EXPECT_THROW(StrictPartition::from_weight(Weight({2, 2, 0})), std::invalid_argument);
  EXPECT_THROW(StrictPartition::from_weight(Weight::zero(3)), std::invalid_argument);
  EXPECT_EQ(StrictPartition({3, 1}).as_weight(3), Weight({3, 1, 0}));
  EXPECT_THROW(StrictPartition({3, 2, 1}).as_weight(2), std::invalid_argument);
}

TEST(StrictPartition, Enumeration) {
  EXPECT_EQ(strict_partitions_of(6).size(), 4u);  // 6, 51, 42, 321
  EXPECT_EQ(strict_partitions_of(6).front(), StrictPartition({6}));
  EXPECT_EQ(strict_partitions_of(6).back(), StrictPartition({3, 2, 1}));
}

TEST(ShiftedDiagram, Profiles) {
  const ShiftedDiagram d31(StrictPartition({3, 1}));
  EXPECT_EQ(d31.row_lengths(), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(d31.row_indents(), (std::vector<int>{2, 1, 0}));

  const ShiftedDiagram big(StrictPartition({7, 6, 4, 2}));
  EXPECT_EQ(big.row_lengths(), (std::vector<int>{1, 2, 3, 4, 4, 3, 2}));
  EXPECT_EQ(big.row_indents(), (std::vector<int>{6, 5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(big.size(), 19u);

  const ShiftedDiagram d2(StrictPartition({2}));
  EXPECT_EQ(d2.cells(), (std::vector<Cell>{{1, 2}, {2, 1}}));
  for (const Cell& c : big.cells()) {
    EXPECT_EQ(big.diagonal_of(c), c.row + c.col - 7);
  }
}

TEST(ShiftedTableau, Enumeration) {
  EXPECT_EQ(enumerate_ssyt(StrictPartition({3, 1}), n3).size(), 24u);
  EXPECT_EQ(enumerate_ssyt(StrictPartition({2}), n3).size(), 9u);
  EXPECT_EQ(enumerate_ssyt(StrictPartition({1}), Alphabet(5)).size(), 5u);
  EXPECT_EQ(enumerate_ssyt(StrictPartition({4}), n3).size(), 81u);
}

TEST(ShiftedTableau, RejectsNonSemistandard) {
  EXPECT_THROW(tableau("3,1", {1, 2, 1, 1}), std::invalid_argument);  // row decreases
  EXPECT_THROW(tableau("3,1", {2, 1, 2, 1}), std::invalid_argument);  // column not strict
  EXPECT_THROW(tableau("3,1", {1, 1, 2, 4}), std::invalid_argument);  // outside 1..3
}

TEST(ShiftedTableau, Readings) {
  const ShiftedTableau t = top31();
  EXPECT_EQ(t.to_string(), "1/12/1");
  EXPECT_EQ(reading(t, ReadingStyle::middle_eastern), Word({1, 2, 1, 1}));
  EXPECT_EQ(reading(t, ReadingStyle::far_eastern), Word({1, 2, 1, 1}));
  EXPECT_EQ(reading(tableau("1", {2}), ReadingStyle::middle_eastern), Word({2}));

  const ShiftedTableau u = tableau("3,1", {1, 2, 3, 1});
  EXPECT_EQ(reading(u, ReadingStyle::middle_eastern), Word({1, 3, 2, 1}));
  EXPECT_EQ(reading(u, ReadingStyle::far_eastern), Word({1, 3, 2, 1}));
  const ShiftedTableau v = tableau("3,2", {1, 1, 2, 1, 2});
  EXPECT_EQ(reading(v, ReadingStyle::middle_eastern), Word({1, 2, 1, 2, 1}));
  EXPECT_EQ(reading(v, ReadingStyle::far_eastern), Word({1, 2, 1, 2, 1}));
}

TEST(ShiftedTableau, FromReadingInvertsReading) {
  for (const ShiftedTableau& t : enumerate_ssyt(StrictPartition({3, 1}), n3)) {
    for (auto style : {ReadingStyle::middle_eastern, ReadingStyle::far_eastern}) {
      EXPECT_EQ(from_reading(t.diagram(), reading(t, style), style, n3), t);
    }
  }
  const ShiftedDiagram d(StrictPartition({3, 1}));
  EXPECT_EQ(from_reading(d, Word({1, 1, 2, 1}), ReadingStyle::middle_eastern, n3), std::nullopt);
}

TEST(ShiftedTableau, OperatorsOnTopNode) {
  const ShiftedTableau t = top31();
  const auto me = ReadingStyle::middle_eastern;
  const auto f1bar = tableau_op(t, OperatorLabel::odd_one(), Direction::lower, me, n3);
  ASSERT_TRUE(f1bar.has_value());
  EXPECT_EQ(f1bar->at({3, 1}), 2);
  EXPECT_EQ(f1bar->to_string(), "1/12/2");

  const auto f2 = tableau_op(t, OperatorLabel::even(2), Direction::lower, me, n3);
  ASSERT_TRUE(f2.has_value());
  EXPECT_EQ(f2->at({2, 3}), 3);
  EXPECT_EQ(f2->to_string(), "1/13/1");

  EXPECT_EQ(tableau_op(t, OperatorLabel::even(1), Direction::raise, me, n3), std::nullopt);
}

TEST(ShiftedTableau, HighestTableau) {
  EXPECT_EQ(highest_tableau(StrictPartition({3, 1}), n3), top31());
  EXPECT_EQ(highest_tableau(StrictPartition({1}), Alphabet(2)).to_string(), "1");
  const ShiftedTableau t21 = highest_tableau(StrictPartition({2, 1}), n3);
  EXPECT_EQ(reading(t21, ReadingStyle::middle_eastern), Word({1, 2, 1}));
  EXPECT_TRUE(is_q_highest(Word({1, 2, 1}), 3, n3));
  EXPECT_THROW(highest_tableau(StrictPartition({3, 2, 1}), Alphabet(2)), std::invalid_argument);
}

TEST(ShiftedTableau, UniqueTableauOfTopWeight) {
  for (int size = 1; size <= 6; ++size) {
    for (const StrictPartition& shape : strict_partitions_of(size)) {
      if (shape.length() > 3) continue;
      int hits = 0;
      for (const ShiftedTableau& t : enumerate_ssyt(shape, n3)) {
        if (weight(reading(t, ReadingStyle::middle_eastern), n3) == shape.as_weight(3)) {
          ++hits;
          EXPECT_EQ(t, highest_tableau(shape, n3));
        }
      }
      EXPECT_EQ(hits, 1) << shape.to_string();
    }
  }
}

TEST(TableauCrystal, Shape31) {
  const CrystalGraph g = build_tableau_crystal(StrictPartition({3, 1}), n3,
                                               ReadingStyle::middle_eastern);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_EQ(g.edges().size(), 38u);
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].hw_word(), Word({1, 2, 1, 1}));
  EXPECT_EQ(comps[0].hw_weight(), Weight({3, 1, 0}));
}

TEST(TableauCrystal, SingleDiagonalMatchesTensorSquare) {
  const CrystalGraph g = build_tableau_crystal(StrictPartition({2}), n3,
                                               ReadingStyle::middle_eastern);
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(canonical_form(comps[0]), canonical_form(components(build_tensor_power(n3, 2))[0]));
}

TEST(TableauCrystal, NotConnectedInGeneral) {
  const CrystalGraph g = build_tableau_crystal(StrictPartition({4}), n3,
                                               ReadingStyle::middle_eastern);
  EXPECT_EQ(g.size(), 81u);
  EXPECT_GE(components(g).size(), 2u);
}

#pragma once

// Strict partitions, the anti-diagonal skew diagram Y_lambda, semistandard
// tableaux on it, and the crystal structure induced by admissible readings.

#include <optional>
#include <string>
#include <vector>

#include "qcrystal/crystal_core.hpp"

namespace qcrystal {

class CrystalGraph;

/// lambda_1 > lambda_2 > ... > lambda_r > 0, r >= 1.
class StrictPartition {
 public:
  explicit StrictPartition(std::vector<int> parts);
  /// "3,1" -> (3,1).  Rejects non-strict input, zeros and junk.
  static StrictPartition parse(const std::string& text);
  /// Drops trailing zeros; throws unless the weight lies in Lambda^+ and is nonzero.
  static StrictPartition from_weight(const Weight& mu);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int d) const { return parts_.at(d - 1); }
  /// Zero-padded weight of rank n; throws if length() > n.
  Weight as_weight(int n) const;

  /// "(3,1)"
  std::string to_string() const;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// All strict partitions of `size`, in decreasing lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int size);

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cells {(t, lambda_1 - t + d) : 1 <= d <= r, d <= t <= d + lambda_d - 1},
/// stored in row-major order.
class ShiftedDiagram {
 public:
  explicit ShiftedDiagram(const StrictPartition& shape);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  int rows() const;
  std::vector<int> row_lengths() const;
  /// Empty columns to the left of each row.
  std::vector<int> row_indents() const;
  /// Which anti-diagonal d (1..r) a cell of the diagram belongs to.
  int diagonal_of(const Cell& c) const;
  /// Index of the cell in cells(), or -1.
  int find(const Cell& c) const;

 private:
  StrictPartition shape_;
  std::vector<Cell> cells_;
};

inline ShiftedDiagram diagram_of(const StrictPartition& shape) { return ShiftedDiagram(shape); }

enum class ReadingStyle : std::uint8_t {
  middle_eastern,  ///< rows top to bottom, each right to left
  far_eastern,     ///< columns right to left, each top to bottom
};

/// Positions into diagram.cells() in reading order.
std::vector<int> reading_order(const ShiftedDiagram& diagram, ReadingStyle style);

class ShiftedTableau {
 public:
  /// entries aligned with diagram.cells(); throws unless semistandard in 1..n.
  ShiftedTableau(ShiftedDiagram diagram, std::vector<Letter> entries, Alphabet a);

  const ShiftedDiagram& diagram() const { return diagram_; }
  const std::vector<Letter>& entries() const { return entries_; }
  Letter at(const Cell& c) const;

  /// Rows top to bottom separated by '/', e.g. "1/12/1".
  std::string to_string() const;

  friend bool operator==(const ShiftedTableau& x, const ShiftedTableau& y) {
    return x.diagram_.shape() == y.diagram_.shape() && x.entries_ == y.entries_;
  }

 private:
  ShiftedDiagram diagram_;
  std::vector<Letter> entries_;
};

/// Rows weakly increase to the right, columns strictly increase downwards.
bool is_semistandard(const ShiftedDiagram& diagram, const std::vector<Letter>& entries);

/// All semistandard fillings with entries 1..n, ordered lexicographically by
/// their row-major entry lists.
std::vector<ShiftedTableau> enumerate_ssyt(const StrictPartition& shape, Alphabet a);

Word reading(const ShiftedTableau& t, ReadingStyle style);
/// Inverse of reading(); nullopt when the filling is not semistandard.
std::optional<ShiftedTableau> from_reading(const ShiftedDiagram& diagram, const Word& w,
                                           ReadingStyle style, Alphabet a);

/// Applies the word operator to the reading.  Throws std::logic_error if the
/// image is not the reading of a semistandard tableau.
std::optional<ShiftedTableau> tableau_op(const ShiftedTableau& t, OperatorLabel label,
                                         Direction dir, ReadingStyle style, Alphabet a);

/// Graph whose nodes are readings of enumerate_ssyt(shape, n).
CrystalGraph build_tableau_crystal(const StrictPartition& shape, Alphabet a, ReadingStyle style);

/// The filling with anti-diagonal d filled by d; throws if length() > n.
ShiftedTableau highest_tableau(const StrictPartition& shape, Alphabet a);

}  // namespace qcrystal

#include "qcrystal/shifted_tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qcrystal/crystal_graph.hpp"

namespace qcrystal {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("strict partition needs at least one part");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("strict partition parts must be positive");
    if (k > 0 && parts_[k] >= parts_[k - 1]) {
      throw std::invalid_argument("partition " + to_string() + " is not strictly decreasing");
    }
  }
}

StrictPartition StrictPartition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.size() > 6 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad shape '" + text + "': expected e.g. 3,1");
    }
    parts.push_back(std::stoi(token));
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("bad shape '" + text + "'");
  return StrictPartition(std::move(parts));
}

StrictPartition StrictPartition::from_weight(const Weight& mu) {
  if (!mu.is_strict_partition()) {
    throw std::invalid_argument("weight " + mu.to_string() + " is not a strict partition");
  }
  std::vector<int> parts;
  for (int x : mu.coords()) {
    if (x > 0) parts.push_back(x);
  }
  return StrictPartition(std::move(parts));
}

int StrictPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Weight StrictPartition::as_weight(int n) const {
  if (length() > n) {
    throw std::invalid_argument("partition " + to_string() + " has more than " + std::to_string(n) +
                                " parts");
  }
  std::vector<int> coords(parts_);
  coords.resize(n, 0);
  return Weight(std::move(coords));
}

std::string StrictPartition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

std::vector<StrictPartition> strict_partitions_of(int size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (!cur.empty()) out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p - 1);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

ShiftedDiagram::ShiftedDiagram(const StrictPartition& shape) : shape_(shape) {
  const int top = shape[1];
  for (int d = 1; d <= shape.length(); ++d) {
    for (int t = d; t <= d + shape[d] - 1; ++t) cells_.push_back(Cell{t, top - t + d});
  }
  std::sort(cells_.begin(), cells_.end());
}

int ShiftedDiagram::rows() const { return cells_.empty() ? 0 : cells_.back().row; }

std::vector<int> ShiftedDiagram::row_lengths() const {
  std::vector<int> out(rows(), 0);
  for (const Cell& c : cells_) ++out[c.row - 1];
  return out;
}

std::vector<int> ShiftedDiagram::row_indents() const {
  std::vector<int> out(rows(), 0);
  std::vector<bool> seen(rows(), false);
  for (const Cell& c : cells_) {
    if (!seen[c.row - 1]) {
      out[c.row - 1] = c.col - 1;
      seen[c.row - 1] = true;
    }
  }
  return out;
}

int ShiftedDiagram::diagonal_of(const Cell& c) const { return c.col + c.row - shape_[1]; }

int ShiftedDiagram::find(const Cell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return static_cast<int>(it - cells_.begin());
}

std::vector<int> reading_order(const ShiftedDiagram& diagram, ReadingStyle style) {
  std::vector<int> order(diagram.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& cells = diagram.cells();
  if (style == ReadingStyle::middle_eastern) {
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return std::pair(cells[x].row, -cells[x].col) < std::pair(cells[y].row, -cells[y].col);
    });
  } else {
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return std::pair(-cells[x].col, cells[x].row) < std::pair(-cells[y].col, cells[y].row);
    });
  }
  return order;
}

bool is_semistandard(const ShiftedDiagram& diagram, const std::vector<Letter>& entries) {
  if (entries.size() != diagram.size()) return false;
  const auto& cells = diagram.cells();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const int left = diagram.find(Cell{cells[k].row, cells[k].col - 1});
    if (left >= 0 && entries[left] > entries[k]) return false;
    const int up = diagram.find(Cell{cells[k].row - 1, cells[k].col});
    if (up >= 0 && entries[up] >= entries[k]) return false;
  }
  return true;
}

ShiftedTableau::ShiftedTableau(ShiftedDiagram diagram, std::vector<Letter> entries, Alphabet a)
    : diagram_(std::move(diagram)), entries_(std::move(entries)) {
  for (Letter x : entries_) {
    if (!a.valid_letter(x)) throw std::invalid_argument("tableau entry outside alphabet");
  }
  if (!is_semistandard(diagram_, entries_)) {
    throw std::invalid_argument("filling is not semistandard");
  }
}

Letter ShiftedTableau::at(const Cell& c) const {
  const int k = diagram_.find(c);
  if (k < 0) throw std::out_of_range("cell outside the diagram");
  return entries_[k];
}

std::string ShiftedTableau::to_string() const {
  std::string s;
  int row = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Cell& c = diagram_.cells()[k];
    if (c.row != row) {
      if (row != 0) s += "/";
      row = c.row;
    }
    s += std::to_string(entries_[k]);
  }
  return s;
}

std::vector<ShiftedTableau> enumerate_ssyt(const StrictPartition& shape, Alphabet a) {
  const ShiftedDiagram diagram(shape);
  const auto& cells = diagram.cells();
  const std::size_t size = cells.size();
  // Row-major order fills the left and upper neighbours first.
  std::vector<int> left(size), up(size);
  for (std::size_t k = 0; k < size; ++k) {
    left[k] = diagram.find(Cell{cells[k].row, cells[k].col - 1});
    up[k] = diagram.find(Cell{cells[k].row - 1, cells[k].col});
  }

  std::vector<ShiftedTableau> out;
  std::vector<Letter> entries(size, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == size) {
      out.emplace_back(diagram, entries, a);
      return;
    }
    int low = 1;
    if (left[k] >= 0) low = std::max<int>(low, entries[left[k]]);
    if (up[k] >= 0) low = std::max<int>(low, entries[up[k]] + 1);
    for (int x = low; x <= a.rank(); ++x) {
      entries[k] = static_cast<Letter>(x);
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

Word reading(const ShiftedTableau& t, ReadingStyle style) {
  std::vector<Letter> letters;
  letters.reserve(t.entries().size());
  for (int k : reading_order(t.diagram(), style)) letters.push_back(t.entries()[k]);
  return Word(std::move(letters));
}

std::optional<ShiftedTableau> from_reading(const ShiftedDiagram& diagram, const Word& w,
                                           ReadingStyle style, Alphabet a) {
  if (w.size() != diagram.size()) {
    throw std::invalid_argument("reading length does not match the diagram");
  }
  w.validate(a);
  const auto order = reading_order(diagram, style);
  std::vector<Letter> entries(diagram.size());
  for (std::size_t k = 0; k < order.size(); ++k) entries[order[k]] = w[k];
  if (!is_semistandard(diagram, entries)) return std::nullopt;
  return ShiftedTableau(diagram, std::move(entries), a);
}

std::optional<ShiftedTableau> tableau_op(const ShiftedTableau& t, OperatorLabel label,
                                         Direction dir, ReadingStyle style, Alphabet a) {
  auto image = apply(reading(t, style), label, dir, a);
  if (!image) return std::nullopt;
  auto result = from_reading(t.diagram(), *image, style, a);
  if (!result) {
    throw std::logic_error("operator " + label.token() + " maps tableau " + t.to_string() +
                           " outside the semistandard set");
  }
  return result;
}

CrystalGraph build_tableau_crystal(const StrictPartition& shape, Alphabet a, ReadingStyle style) {
  std::vector<Word> words;
  for (const ShiftedTableau& t : enumerate_ssyt(shape, a)) words.push_back(reading(t, style));
  return CrystalGraph::from_words(std::move(words), a);
}

ShiftedTableau highest_tableau(const StrictPartition& shape, Alphabet a) {
  if (shape.length() > a.rank()) {
    throw std::invalid_argument("no filling of weight " + shape.to_string() + " with entries 1.." +
                                std::to_string(a.rank()));
  }
  ShiftedDiagram diagram(shape);
  std::vector<Letter> entries;
  for (const Cell& c : diagram.cells()) entries.push_back(static_cast<Letter>(diagram.diagonal_of(c)));
  return ShiftedTableau(std::move(diagram), std::move(entries), a);
}

}  // namespace qcrystal

#include "qcrystal/crystal_core.hpp"

#include <algorithm>
#include <numeric>

namespace qcrystal {

Alphabet::Alphabet(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank n must be >= 2, got " + std::to_string(n));
  if (n > 255) throw std::invalid_argument("rank n must be <= 255");
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x < 1 || x > 255) throw std::invalid_argument("letter out of range: " + std::to_string(x));
    letters_.push_back(static_cast<Letter>(x));
  }
}

Word Word::with(std::size_t k, Letter x) const {
  Word out = *this;
  out.letters_.at(k) = x;
  return out;
}

Word Word::operator+(const Word& other) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::slice(std::size_t first, std::size_t count) const {
  auto begin = letters_.begin() + static_cast<std::ptrdiff_t>(first);
  return Word(std::vector<Letter>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

void Word::validate(Alphabet a) const {
  for (Letter x : letters_) {
    if (!a.valid_letter(x)) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside 1.." +
                                  std::to_string(a.rank()));
    }
  }
}

std::string Word::to_string() const {
  if (letters_.empty()) return "∅";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += "⊗";
    s += std::to_string(letters_[k]);
  }
  return s;
}

Weight Weight::unit(int n, int j) {
  Weight w = zero(n);
  w.coords_.at(j - 1) = 1;
  return w;
}

Weight Weight::simple_root(int n, int i) {
  Weight w = zero(n);
  w.coords_.at(i - 1) = 1;
  w.coords_.at(i) = -1;
  return w;
}

int Weight::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) out.coords_[k] += o.coords_[k];
  return out;
}

Weight Weight::operator-(const Weight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) out.coords_[k] -= o.coords_[k];
  return out;
}

Weight Weight::reflect(int i) const {
  Weight out = *this;
  std::swap(out.coords_.at(i - 1), out.coords_.at(i));
  return out;
}

bool Weight::is_partition() const {
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] < 0) return false;
    if (k + 1 < coords_.size() && coords_[k] < coords_[k + 1]) return false;
  }
  return true;
}

bool Weight::is_strict_partition() const {
  if (!is_partition()) return false;
  for (std::size_t k = 0; k + 1 < coords_.size(); ++k) {
    if (coords_[k] == coords_[k + 1] && coords_[k] != 0) return false;
  }
  return true;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

int OperatorLabel::slot(Alphabet a) const {
  validate(a);
  return is_odd() ? a.rank() - 1 : index_ - 1;
}

OperatorLabel OperatorLabel::from_slot(int slot, Alphabet a) {
  if (slot < 0 || slot >= a.rank()) throw std::out_of_range("label slot out of range");
  return slot == a.rank() - 1 ? odd_one() : even(slot + 1);
}

void OperatorLabel::validate(Alphabet a) const {
  if (!is_odd() && !a.valid_index(index_)) {
    throw std::out_of_range("even label " + std::to_string(index_) + " outside 1.." +
                            std::to_string(a.rank() - 1));
  }
}

std::string OperatorLabel::token() const { return is_odd() ? "1bar" : std::to_string(index_); }

OperatorLabel OperatorLabel::parse_token(const std::string& token) {
  if (token == "1bar") return odd_one();
  if (token.empty() || token.size() > 3 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("bad operator label '" + token + "'");
  }
  int i = std::stoi(token);
  if (i < 1) throw std::invalid_argument("bad operator label '" + token + "'");
  return even(i);
}

Weight weight(const Word& w, Alphabet a) {
  std::vector<int> coords(a.rank(), 0);
  for (Letter x : w.letters()) {
    if (!a.valid_letter(x)) throw std::invalid_argument("letter outside alphabet");
    ++coords[x - 1];
  }
  return Weight(std::move(coords));
}

namespace {

void check_index(int i, Alphabet a) {
  if (!a.valid_index(i)) {
    throw std::out_of_range("operator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(a.rank() - 1));
  }
}

// Unmatched positions after bracket cancellation; pluses and minuses each in
// increasing position order.  Every unmatched minus lies left of every
// unmatched plus.
struct Signature {
  std::vector<std::size_t> minuses;
  std::vector<std::size_t> pluses;
};

Signature reduced_signature(const Word& w, int i) {
  Signature sig;
  const auto plus = static_cast<Letter>(i);
  const auto minus = static_cast<Letter>(i + 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == plus) {
      sig.pluses.push_back(k);
    } else if (w[k] == minus) {
      if (!sig.pluses.empty()) {
        sig.pluses.pop_back();
      } else {
        sig.minuses.push_back(k);
      }
    }
  }
  return sig;
}

}  // namespace

int eps(const Word& w, int i, Alphabet a) {
  check_index(i, a);
  return static_cast<int>(reduced_signature(w, i).minuses.size());
}

int phi(const Word& w, int i, Alphabet a) {
  check_index(i, a);
  return static_cast<int>(reduced_signature(w, i).pluses.size());
}

std::optional<Word> f_even(const Word& w, int i, Alphabet a) {
  check_index(i, a);
  Signature sig = reduced_signature(w, i);
  if (sig.pluses.empty()) return std::nullopt;
  return w.with(sig.pluses.front(), static_cast<Letter>(i + 1));
}

std::optional<Word> e_even(const Word& w, int i, Alphabet a) {
  check_index(i, a);
  Signature sig = reduced_signature(w, i);
  if (sig.minuses.empty()) return std::nullopt;
  return w.with(sig.minuses.back(), static_cast<Letter>(i));
}

std::optional<std::size_t> last_one_or_two(const Word& w) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k] == 1 || w[k] == 2) return k;
  }
  return std::nullopt;
}

std::optional<Word> f_odd1(const Word& w) {
  auto p = last_one_or_two(w);
  if (!p || w[*p] != 1) return std::nullopt;
  return w.with(*p, 2);
}

std::optional<Word> e_odd1(const Word& w) {
  auto p = last_one_or_two(w);
  if (!p || w[*p] != 2) return std::nullopt;
  return w.with(*p, 1);
}

std::optional<Word> apply(const Word& w, OperatorLabel label, Direction dir, Alphabet a) {
  label.validate(a);
  if (label.is_odd()) return dir == Direction::lower ? f_odd1(w) : e_odd1(w);
  return dir == Direction::lower ? f_even(w, label.index(), a) : e_even(w, label.index(), a);
}

}  // namespace qcrystal

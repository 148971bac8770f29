#include "qcrystal/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qcrystal/crystal_graph.hpp"

namespace qcrystal {

WeightPolynomial WeightPolynomial::unit(int rank) {
  WeightPolynomial p(rank);
  p.add(Weight::zero(rank), 1);
  return p;
}

std::uint64_t WeightPolynomial::coefficient(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t WeightPolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [mu, c] : terms_) sum += c;
  return sum;
}

void WeightPolynomial::add(const Weight& mu, std::uint64_t c) {
  if (mu.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
  if (c == 0) return;
  terms_[mu] += c;
}

WeightPolynomial WeightPolynomial::operator+(const WeightPolynomial& o) const {
  if (o.rank_ != rank_) throw std::invalid_argument("character rank mismatch");
  WeightPolynomial out = *this;
  for (const auto& [mu, c] : o.terms_) out.add(mu, c);
  return out;
}

WeightPolynomial WeightPolynomial::operator*(const WeightPolynomial& o) const {
  if (o.rank_ != rank_) throw std::invalid_argument("character rank mismatch");
  WeightPolynomial out(rank_);
  for (const auto& [mu, c] : terms_) {
    for (const auto& [nu, d] : o.terms_) out.add(mu + nu, c * d);
  }
  return out;
}

WeightPolynomial WeightPolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative character power");
  WeightPolynomial out = unit(rank_);
  for (int t = 0; t < k; ++t) out = out * *this;
  return out;
}

bool WeightPolynomial::is_symmetric() const {
  for (const auto& [mu, c] : terms_) {
    for (int i = 1; i < rank_; ++i) {
      if (coefficient(mu.reflect(i)) != c) return false;
    }
  }
  return true;
}

std::string WeightPolynomial::to_string() const {
  std::string s;
  for (const auto& [mu, c] : terms_) s += mu.to_string() + " " + std::to_string(c) + "\n";
  return s;
}

WeightPolynomial character(const CrystalGraph& g) {
  WeightPolynomial p(g.alphabet().rank());
  for (std::size_t k = 0; k < g.size(); ++k) p.add(g.weight_of(k), 1);
  return p;
}

WeightPolynomial character(const Component& c) { return character(c.graph); }

std::uint64_t shifted_syt_count(const StrictPartition& shape) {
  static std::mutex guard;
  static std::map<std::vector<int>, std::uint64_t> memo;

  const std::vector<int>& parts = shape.parts();
  if (parts == std::vector<int>{1}) return 1;
  {
    std::lock_guard lock(guard);
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
  }
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    std::vector<int> smaller = parts;
    --smaller[j];
    if (smaller[j] == 0) {
      // only the last part may vanish
      if (j + 1 != parts.size()) continue;
      smaller.pop_back();
    } else if (j + 1 < parts.size() && smaller[j] <= smaller[j + 1]) {
      continue;
    }
    if (smaller.empty()) continue;
    total += shifted_syt_count(StrictPartition(smaller));
  }
  std::lock_guard lock(guard);
  memo.emplace(parts, total);
  return total;
}

}  // namespace qcrystal

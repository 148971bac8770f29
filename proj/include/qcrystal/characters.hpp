#pragma once

// Weight generating functions of crystals and the shifted standard tableau count.

#include <cstdint>
#include <map>
#include <string>

#include "qcrystal/crystal_core.hpp"
#include "qcrystal/shifted_tableaux.hpp"

namespace qcrystal {

class CrystalGraph;
struct Component;

/// sum_mu c_mu e^mu with positive integer coefficients; zero terms are never stored.
class WeightPolynomial {
 public:
  explicit WeightPolynomial(int rank) : rank_(rank) {}
  /// e^0
  static WeightPolynomial unit(int rank);

  int rank() const { return rank_; }
  const std::map<Weight, std::uint64_t>& terms() const { return terms_; }
  std::uint64_t coefficient(const Weight& mu) const;
  std::uint64_t total() const;

  void add(const Weight& mu, std::uint64_t c);
  WeightPolynomial operator+(const WeightPolynomial& o) const;
  /// Throws std::invalid_argument on rank mismatch.
  WeightPolynomial operator*(const WeightPolynomial& o) const;
  WeightPolynomial pow(int k) const;

  /// True iff every coefficient is invariant under permuting coordinates.
  bool is_symmetric() const;

  std::string to_string() const;

  friend bool operator==(const WeightPolynomial&, const WeightPolynomial&) = default;

 private:
  int rank_;
  std::map<Weight, std::uint64_t> terms_;
};

WeightPolynomial character(const CrystalGraph& g);
WeightPolynomial character(const Component& c);
inline WeightPolynomial product(const WeightPolynomial& a, const WeightPolynomial& b) { return a * b; }

/// g(lambda) = sum over strict mu with mu + eps_j = lambda of g(mu), g((1)) = 1.
std::uint64_t shifted_syt_count(const StrictPartition& shape);

}  // namespace qcrystal

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "a3res/partitions.hpp"

namespace a3res {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// A finite non-negative combination of irreducible GL(n) representations,
/// keyed by dominant weight, iterated lexicographically descending.
struct RepSum {
  std::map<Weight, long long, std::greater<Weight>> terms;

  void add(const Weight& w, long long mult);
  bool empty() const { return terms.empty(); }
  long long total_mult() const;
  Int dimension() const;  ///< sum of Weyl dimensions (n = weight length)
  bool operator==(const RepSum&) const = default;
  static RepSum single(const Weight& w, long long mult = 1);
};

/// Weyl dimension of the irreducible GL(n) representation with highest weight w
/// (n = w.size()): product over i<j of (w_i - w_j + j - i)/(j - i).
Int weyl_dimension(const Weight& w);

/// Number of weight-w vectors in the irreducible with highest weight gamma (same length).
long long weight_multiplicity(const Weight& gamma, const Weight& w);

/// Littlewood-Richardson coefficient c^lambda_{mu nu} (skew tableau count, memoized).
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// S_lambda(B ⊕ C) = ⊕ (S_mu B ⊗ S_nu C)^{c^lambda_{mu nu}}, keeping only pairs with
/// mu rows <= dimB and nu rows <= dimC. Ordered by |nu| ascending, then mu, nu descending.
std::vector<std::tuple<Partition, Partition, long long>> schur_of_direct_sum(
    const Partition& lambda, int dimB, int dimC);

/// Cauchy: Λ^t of a product of a dimV-dimensional and a dimQ-dimensional factor;
/// returns all λ with |λ| = t, rows(λ) <= dimV and λ_1 <= dimQ, lex descending.
std::vector<Partition> cauchy_exterior(int t, int dimV, int dimQ);

/// Number of semistandard tableaux of the given shape and content (entries >= 0).
long long kostka(const Partition& lambda, const std::vector<int>& content);

/// Decomposition of S_alpha(V) ⊗ S_beta(V) for GL(n) dominant weights alpha, beta
/// (negative entries handled by determinant twists).
RepSum tensor_decompose(const Weight& alpha, const Weight& beta, int n);

/// Bilinear extension to formal sums (both over the same n).
RepSum tensor_decompose(const RepSum& a, const RepSum& b);

/// Optional persistent textual cache for the LR and Kostka memo tables.
bool load_combinatorics_cache(const std::string& path, std::string& err);
bool save_combinatorics_cache(const std::string& path, std::string& err);
size_t combinatorics_cache_size();

}  // namespace a3res

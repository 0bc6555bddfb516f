#pragma once

#include <map>
#include <optional>

#include "a3res/lr.hpp"

namespace a3res {

/// Cohomology of an equivariant bundle, organized by cohomological degree.
/// `Ambiguous` marks tables whose entries are only upper bounds (per degree and
/// weight) because the two filtration computations did not force a unique answer.
struct CohomologyTable {
  enum class Status { Exact, Ambiguous };
  std::map<int, RepSum> byDegree;
  Status status = Status::Exact;

  bool zero() const { return byDegree.empty(); }
  void add(int degree, const Weight& w, long long mult);
  /// Per-weight alternating sum over degrees.
  std::map<Weight, long long, std::greater<Weight>> euler() const;
  bool sameEntries(const CohomologyTable& o) const { return byDegree == o.byDegree; }
  bool operator==(const CohomologyTable&) const = default;
};

/// Bott on Gr(r, n): bundle S_alpha(R) ⊗ S_beta(Q) with alpha dominant of length r
/// (tautological subbundle) and beta dominant of length n-r (quotient bundle).
/// Returns the surviving degree and GL(n) weight, or absent if all cohomology vanishes.
std::optional<BottResult> bott_grassmannian(int r, int n, const Weight& alpha,
                                            const Weight& beta);

/// Cohomology of S_lambda(R) ⊗ S_mu(Q*) on Gr(r, n); lambda ≤ r rows, mu ≤ n-r rows.
CohomologyTable cohomology_grassmannian(int r, int n, const Partition& lambda,
                                        const Partition& mu);

/// Derived pushforward of S_gamma(R2/R1) along Flag(r1,r2,n) -> Gr(r1,n):
/// at most one degree survives, carrying a dominant weight on W/R1 (length n-r1).
/// gamma must have at most r2-r1 rows.
std::optional<BottResult> pushforward_flag_factor(const Partition& gamma, int r1, int r2,
                                                  int n);

/// The Grassmannian factor on the third vertex: cohomology of S_{lambda'}(Q*) on
/// Gr(c, d3). At most one degree survives; the weight is returned in dualized
/// dominant form (a dominant weight on V3*, length d3). Absent when the bundle is
/// zero (lambda_1 > d3-c) or the weight is singular.
std::optional<BottResult> grassmannian_quotient_factor(const Partition& lambda, int c,
                                                       int d3);

}  // namespace a3res

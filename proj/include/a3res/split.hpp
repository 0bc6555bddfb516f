#pragma once

#include <optional>

#include "a3res/bott.hpp"

namespace a3res {

/// The 2-step flag variety Flag(r1, r2, n): flags R1 ⊂ R2 ⊂ W = k^n with
/// dim R_i = r_i. The bundles of interest are S_lambda(R2) ⊗ S_mu((W/R1)*).
struct FlagContext {
  int r1 = 0;
  int r2 = 0;
  int n = 0;

  bool valid() const { return 0 <= r1 && r1 <= r2 && r2 <= n; }
  /// Flag(n-r2, n-r1, n), the context on W* under which the roles of the
  /// subbundle and the quotient (hence of lambda and mu) are exchanged.
  FlagContext dualContext() const { return {n - r2, n - r1, n}; }
  bool operator==(const FlagContext&) const = default;
};

/// Cohomology of the associated graded bundle
///   B1 = S_lambda(R1 ⊕ R2/R1) ⊗ S_mu((W/R1)*):
/// expand via the direct-sum rule, push each S_gamma(R2/R1) factor down to
/// Gr(r1, n), tensor with the mu factor on W/R1, and finish with Bott on
/// Gr(r1, n). Status is always Exact (it is the exact cohomology of B1).
/// Requires lambda ≤ r2 rows and mu ≤ n-r1 rows.
CohomologyTable cohomology_B1(const FlagContext& ctx, const Partition& lambda,
                              const Partition& mu);

/// Cohomology of B2 = S_lambda(R2) ⊗ S_mu((W/R2 ⊕ R2/R1)*), computed as the
/// degreewise dual of cohomology_B1 on the dual context with lambda and mu
/// exchanged.
CohomologyTable cohomology_B2(const FlagContext& ctx, const Partition& lambda,
                              const Partition& mu);

/// Degree-preserving dualization of every representation in the table
/// (weight w ↦ reversed negation of w).
CohomologyTable duality(const FlagContext& ctx, const CohomologyTable& table);

/// Reconciles the two filtration computations. For each dominant weight the
/// true multiplicities x_i satisfy 0 ≤ x_i ≤ min(b1_i, b2_i) and
/// Σ (-1)^i x_i = the common Euler characteristic. If every weight admits a
/// unique solution, returns it with status Exact; otherwise returns the
/// degreewise min table with status Ambiguous. Throws std::logic_error when
/// the two tables have different Euler characteristics or a weight admits no
/// solution (both indicate an upstream bug).
CohomologyTable reconcile(const CohomologyTable& b1, const CohomologyTable& b2);

/// The parameter range in which the cohomology of S_lambda(R2) ⊗ S_mu((W/R1)*)
/// is guaranteed to be concentrated in a single degree: n ≤ 4 and
/// lambda_1, mu_1 ≤ 3. Inside this range concentrate_single_degree resolves
/// every reconciliation the filtration caps leave under-determined.
bool concentration_range(const FlagContext& ctx, const Partition& lambda, const Partition& mu);

/// Resolves an under-determined reconciliation under the additional hypothesis
/// that the cohomology is concentrated in a single degree (the caller is
/// responsible for invoking this only where that hypothesis holds, see
/// concentration_range). If every Euler characteristic vanishes the table is
/// zero; otherwise the surviving degree D must satisfy (-1)^D chi_w ≥ 0 and
/// min(b1_D(w), b2_D(w)) ≥ |chi_w| for every weight w, and the multiplicity at
/// D is |chi_w|. Returns the table when exactly one degree qualifies, absent
/// when none or several do. Throws std::logic_error on Euler-characteristic
/// disagreement between the two filtrations.
std::optional<CohomologyTable> concentrate_single_degree(const CohomologyTable& b1,
                                                         const CohomologyTable& b2);

/// Closed-form cohomology for hook shapes lambda = (a+1, 1^b).
/// Requires 0 < r1 < r2 < n, 0 < a ≤ n-r2 and 0 ≤ b < r2.
/// Covered cases:
///   (1) a < n-r2: concentrated in one degree (nonzero only when b < r1);
///   (2) a = n-r2 and mu a single nonzero row: the explicit multiplicity-one
///       list of irreducibles.
/// Returns absent when (ctx, lambda, mu) matches neither case.
std::optional<CohomologyTable> hook_cohomology(const FlagContext& ctx, int a, int b,
                                               const Partition& mu);

}  // namespace a3res

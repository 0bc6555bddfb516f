#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "a3res/split.hpp"

namespace a3res {

/// Strategy selector for flag-variety cohomology.
///   Auto:       closed forms and filtration reconciliation first, exact
///               chain-complex computation only when those stay ambiguous.
///   SplitOnly:  filtration reconciliation only; results may be Ambiguous.
///   Definitive: always run the exact chain-complex computation.
enum class Method { Auto, SplitOnly, Definitive };

struct Limits {
  /// Refuse any single (weight, position) block whose generating set exceeds
  /// this many monomials.
  long long maxBlockBasis = 200000;
};

/// Thrown when a weight block exceeds Limits::maxBlockBasis.
class ResourceLimitError : public std::runtime_error {
 public:
  long long predictedBasisSize;
  explicit ResourceLimitError(long long predicted)
      : std::runtime_error("weight block exceeds the configured basis cap (predicted " +
                           std::to_string(predicted) + " generators)"),
        predictedBasisSize(predicted) {}
};

/// A two-term complex (even space -> odd space) fed to the Schur complex
/// functor. The map is the coordinate projection onto the odd letters.
struct TwoTermComplex {
  enum class Model {
    Abstract,      ///< plain vector spaces; odd letters are the last oddDim coordinates
    QuotientSide,  ///< W -> W/R2 on a flag context; odd letters are the last n-r2
    SubDualSide    ///< W* -> R1* on a flag context; odd letters are the first r1
  };
  Model model = Model::Abstract;
  int evenDim = 0;
  int oddDim = 0;

  static TwoTermComplex abstract(int evenDim, int oddDim) {
    return {Model::Abstract, evenDim, oddDim};
  }
  static TwoTermComplex quotient_side(const FlagContext& ctx) {
    return {Model::QuotientSide, ctx.n, ctx.n - ctx.r2};
  }
  static TwoTermComplex sub_dual_side(const FlagContext& ctx) {
    return {Model::SubDualSide, ctx.n, ctx.r1};
  }
};

/// One symbolic summand of a term: a tensor product of Schur functors of the
/// named spaces, e.g. {("W",(2,1)), ("W/R2",(1))} with a multiplicity.
struct TermSummand {
  std::vector<std::pair<std::string, std::vector<int>>> factors;
  long long mult = 1;
  bool operator==(const TermSummand&) const = default;
};

/// All basis data of one torus weight: per-position block dimensions, basis
/// labels (leading generator monomials; may be empty when not materialized)
/// and the sparse differentials diffs[k] : position k -> position k+1 given as
/// (row in k+1, column in k, value) triples.
struct WeightBlock {
  Weight weight;
  std::vector<long long> dims;
  std::vector<std::vector<std::string>> basisLabels;
  std::vector<std::vector<std::tuple<int, int, Rat>>> diffs;
};

struct ModelState;  // internal engine state, reused by h0_complex

/// A weight-graded complex of exact-rational vector spaces with symbolic term
/// descriptions. d∘d = 0 is asserted exactly whenever blocks are materialized.
struct ChainComplexModel {
  int positions = 0;
  std::vector<std::vector<TermSummand>> termSummands;  ///< size = positions
  std::vector<Int> termDims;                           ///< size = positions
  std::vector<WeightBlock> blocks;                     ///< weights lex-descending
  std::shared_ptr<const ModelState> state;
};

/// The Schur complex of a two-term complex: position i carries
/// ⊕_{|a|=|lambda|-i, |nu|=i} (S_a(even) ⊗ S_{nu'}(odd))^{c^lambda_{a,nu}},
/// realized as the graded Young symmetrizer image inside the graded tensor
/// power, with the derivation differential. Term dimensions are asserted to
/// match the Littlewood-Richardson prediction.
ChainComplexModel schur_complex(const Partition& lambda, const TwoTermComplex& phi,
                                const Limits& limits = {});

/// Totalization of schur_complex(lambda, W->W/R2) ⊗ schur_complex(mu, W*->R1*)
/// over the given context. Terms are sums of pieces
/// S_a(W) ⊗ S_b(W/R2) ⊗ S_c(W*) ⊗ S_d(R1*).
ChainComplexModel total_complex(const FlagContext& ctx, const Partition& lambda,
                                const Partition& mu, const Limits& limits = {});

/// The complex of global sections of the total complex: every piece
/// S_a(W) ⊗ S_b(W/R2) ⊗ S_c(W*) ⊗ S_d(R1*) is replaced by
/// S_a(W) ⊗ S_c(W*) ⊗ S_{(b, 0^{r2-r1}, -d)}(W), with differentials given by
/// the ambient tensor-space differentials followed by the equivariant
/// projection onto that extreme (Cartan) component.
ChainComplexModel h0_complex(const ChainComplexModel& tot, const FlagContext& ctx,
                             const Limits& limits = {});

/// Exact cohomology of S_lambda(R2) ⊗ S_mu((W/R1)*) on the flag context via
/// the global-sections complex: per dominant torus weight, exact-rational rank
/// computation of the projected differentials; the resulting characters are
/// decomposed into irreducibles. Status is always Exact.
CohomologyTable cohomology_definitive(const FlagContext& ctx, const Partition& lambda,
                                      const Partition& mu, const Limits& limits = {});

/// Decomposes a permutation-symmetric character (weight -> count, weights of
/// length n) into a sum of irreducible GL(n) characters. Throws on
/// non-symmetric input or when the decomposition fails (negative residual).
RepSum character_decompose(const std::map<Weight, long long>& character, int n);

/// Symbolic terms of the truncated Schur complex on Gr(r1, n): position i
/// carries ⊕_{|a|=|lambda|-i, |nu|=i, nu_1 <= n-r2} (S_a(W) ⊗ S_{nu'}(W/R1))
/// with multiplicity c^lambda_{a,nu}.
std::vector<std::vector<TermSummand>> truncated_complex_terms(const FlagContext& ctx,
                                                              const Partition& lambda);

/// Cohomology of S_lambda(R2) ⊗ S_mu((W/R1)*) with strategy bookkeeping.
/// path is one of "degenerate", "hook", "hook-dual", "split", "definitive".
struct CohomologyOutcome {
  CohomologyTable table;
  std::string path;
};
CohomologyOutcome cohomology_flag(const FlagContext& ctx, const Partition& lambda,
                                  const Partition& mu, Method method = Method::Auto,
                                  const Limits& limits = {});

}  // namespace a3res

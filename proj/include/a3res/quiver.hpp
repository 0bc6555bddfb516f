#pragma once

#include <string>
#include <vector>

#include "a3res/schurcx.hpp"

namespace a3res {

/// A representation-theoretic datum for the equioriented A3 quiver
/// V1 -X-> V2 -Y-> V3: dimension vector d = (d1,d2,d3) and the rank triple
/// (a, b, c) = (rank X, rank Y, rank YX) of the orbit, together with the
/// multiplicities of the six indecomposable representations.
struct QuiverDatum {
  std::vector<int> d;  // (d1, d2, d3)
  int a = 0, b = 0, c = 0;
  int a1 = 0, a2 = 0, a3 = 0;  // simples at the three vertices
  int b1 = 0, b2 = 0;          // the two length-2 indecomposables; the third
                               // multiplicity equals c (the full interval)
};

/// Solves the rank/multiplicity dictionary: b1 = a-c, b2 = b-c, a1 = d1-a,
/// a2 = d2-a-b+c, a3 = d3-b. Throws std::invalid_argument naming the violated
/// inequality when any multiplicity would be negative.
QuiverDatum datum_from_ranks(const std::vector<int>& d, int a, int b, int c);

/// Parameters of the desingularization: a 2-step flag bundle on V2 = W
/// (r1 = a, r2 = d2 - b2, n = d2) times the Grassmannian Gr(c, d3).
struct DesingularizationParams {
  int r1 = 0, r2 = 0, n = 0;
  int c = 0, d3 = 0;
  FlagContext ctx() const { return {r1, r2, n}; }
};
DesingularizationParams desingularization_params(const QuiverDatum& q);

/// One Cauchy summand of Lambda^t(xi): the pair (mu, lambda) with
/// |lambda| + |mu| = t, lambda inside the r2 x (d3-c) box and mu inside the
/// (n-r1) x d1 box, contributing
/// S_{mu'}(V1) (x) S_mu((W/R1)*) (x) S_lambda(R2) (x) S_{lambda'}(Q*).
struct XiSummand {
  Partition mu;
  Partition lambda;
};
std::vector<XiSummand> xi_exterior_summands(const QuiverDatum& q, int t);

long long xi_rank(const QuiverDatum& q);

/// rank(xi) - dim Flag(r1,r2,n) - dim Gr(c,d3); equals the codimension of the
/// orbit closure and the length of its minimal free resolution.
long long orbit_codimension(const QuiverDatum& q);

/// One summand S_{w1}(V1) (x) S_{w2}(V2) (x) S_{w3}(V3*) of a resolution term.
/// w3 follows the dualized dominant convention: it is a dominant weight on V3*.
struct ResolutionSummand {
  Weight w1, w2, w3;
  long long mult = 1;
  bool operator==(const ResolutionSummand&) const = default;
};

/// The part of the resolution term F_i that originates from Lambda^twist(xi)
/// (a degree-j cohomology class of Lambda^t xi lands in F_{t-j} with twist t).
struct EquivariantTerm {
  int i = 0;
  int twist = 0;
  std::vector<ResolutionSummand> summands;  // sorted by (w1,w2,w3) lex-descending
  bool ambiguous = false;  // only possible under Method::SplitOnly
};

/// Terms of the minimal free resolution up to homological degree iMax, as a
/// list of (i, twist) groups sorted by i then twist. Verifies that F_0 is the
/// single trivial summand and that nothing lands in negative degree. Under
/// Auto/Definitive any ambiguous cohomology aborts (std::logic_error); under
/// SplitOnly the affected groups carry the ambiguous flag instead.
std::vector<EquivariantTerm> resolution_terms(const QuiverDatum& q, int iMax,
                                              Method method = Method::Auto,
                                              const Limits& limits = {});

/// A family of minimal generators of the defining ideal, e.g. the
/// (a+1) x (a+1) minors of X with GL-type S_{(1^{a+1})}V1 (x) S_{(1^{a+1})}V2*.
/// size is the minor size; the GL-type is encoded on (V1, V2, V3*) with zero
/// weights on the uninvolved spaces.
struct GeneratorFamily {
  std::string name;  // "X-minors", "Y-minors", "YX-minors"
  int size = 0;
  Weight w1, w2, w3;
};

struct MinimalGenerators {
  std::vector<GeneratorFamily> families;
  bool f1Match = false;                       // families == computed F_1?
  std::vector<ResolutionSummand> computedF1;  // for the failure report
};

/// The generator families predicted by the rank conditions, cross-checked
/// against the computed F_1.
MinimalGenerators minimal_generators(const QuiverDatum& q, Method method = Method::Auto,
                                     const Limits& limits = {});

}  // namespace a3res

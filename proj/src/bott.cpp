#include "a3res/bott.hpp"

#include <stdexcept>

namespace a3res {

void CohomologyTable::add(int degree, const Weight& w, long long mult) {
  if (mult == 0) return;
  auto& rs = byDegree[degree];
  rs.add(w, mult);
  if (rs.empty()) byDegree.erase(degree);
}

std::map<Weight, long long, std::greater<Weight>> CohomologyTable::euler() const {
  std::map<Weight, long long, std::greater<Weight>> chi;
  for (const auto& [deg, rs] : byDegree) {
    const long long sign = (deg % 2 == 0) ? 1 : -1;
    for (const auto& [w, m] : rs.terms) {
      chi[w] += sign * m;
      if (chi[w] == 0) chi.erase(w);
    }
  }
  return chi;
}

std::optional<BottResult> bott_grassmannian(int r, int n, const Weight& alpha,
                                            const Weight& beta) {
  if (r < 0 || r > n) throw std::invalid_argument("bott_grassmannian: need 0 <= r <= n");
  if (static_cast<int>(alpha.size()) != r)
    throw std::invalid_argument("bott_grassmannian: alpha must have length r");
  if (static_cast<int>(beta.size()) != n - r)
    throw std::invalid_argument("bott_grassmannian: beta must have length n-r");
  if (!is_dominant(alpha) || !is_dominant(beta))
    throw std::invalid_argument("bott_grassmannian: weights must be dominant");
  std::vector<int> delta;
  delta.reserve(n);
  delta.insert(delta.end(), beta.begin(), beta.end());
  delta.insert(delta.end(), alpha.begin(), alpha.end());
  return bott_normalize(delta);
}

CohomologyTable cohomology_grassmannian(int r, int n, const Partition& lambda,
                                        const Partition& mu) {
  if (partition_rows(lambda) > r)
    throw std::invalid_argument("cohomology_grassmannian: lambda has more than r rows");
  if (partition_rows(mu) > n - r)
    throw std::invalid_argument("cohomology_grassmannian: mu has more than n-r rows");
  CohomologyTable t;
  auto res = bott_grassmannian(r, n, pad_to(lambda, r), dual_weight(pad_to(mu, n - r)));
  if (res) t.add(res->degree, res->weight, 1);
  return t;
}

std::optional<BottResult> pushforward_flag_factor(const Partition& gamma, int r1, int r2,
                                                  int n) {
  if (!(0 <= r1 && r1 <= r2 && r2 <= n))
    throw std::invalid_argument("pushforward_flag_factor: need 0 <= r1 <= r2 <= n");
  if (partition_rows(gamma) > r2 - r1)
    throw std::invalid_argument("pushforward_flag_factor: gamma has more than r2-r1 rows");
  // Relative Grassmannian of (r2-r1)-planes in the (n-r1)-dimensional W/R1:
  // the subbundle weight is gamma, the quotient weight is zero.
  return bott_grassmannian(r2 - r1, n - r1, pad_to(gamma, r2 - r1),
                           Weight(n - r2, 0));
}

std::optional<BottResult> grassmannian_quotient_factor(const Partition& lambda, int c,
                                                       int d3) {
  if (!(0 <= c && c <= d3))
    throw std::invalid_argument("grassmannian_quotient_factor: need 0 <= c <= d3");
  const Partition lam = make_partition(lambda);
  if (!lam.empty() && lam[0] > d3 - c) return std::nullopt;  // zero bundle
  auto res = cohomology_grassmannian(c, d3, {}, conjugate(lam));
  if (res.byDegree.empty()) return std::nullopt;
  const auto& [deg, rs] = *res.byDegree.begin();
  // single irreducible by construction; emit on V3* in dominant form
  return BottResult{deg, dual_weight(rs.terms.begin()->first)};
}

}  // namespace a3res

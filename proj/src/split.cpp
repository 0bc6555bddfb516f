#include "a3res/split.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace a3res {

namespace {

void check_context(const FlagContext& ctx) {
  if (!ctx.valid()) throw std::invalid_argument("invalid flag context");
}

void check_bundle(const FlagContext& ctx, const Partition& lambda, const Partition& mu) {
  check_context(ctx);
  if (partition_rows(lambda) > ctx.r2)
    throw std::invalid_argument("lambda has more rows than rank of R2");
  if (partition_rows(mu) > ctx.n - ctx.r1)
    throw std::invalid_argument("mu has more rows than rank of W/R1");
}

}  // namespace

CohomologyTable cohomology_B1(const FlagContext& ctx, const Partition& lambda,
                              const Partition& mu) {
  check_bundle(ctx, lambda, mu);
  const int r1 = ctx.r1, r2 = ctx.r2, n = ctx.n;
  CohomologyTable out;
  const Weight muDual = dual_weight(pad_to(mu, n - r1));
  for (const auto& [nu, gamma, c] : schur_of_direct_sum(lambda, r1, r2 - r1)) {
    auto pf = pushforward_flag_factor(gamma, r1, r2, n);
    if (!pf) continue;
    // The pushforward weight and the mu factor both live on W/R1 (rank n-r1).
    RepSum onQuotient = tensor_decompose(pf->weight, muDual, n - r1);
    for (const auto& [eps, m] : onQuotient.terms) {
      auto bt = bott_grassmannian(r1, n, pad_to(nu, r1), eps);
      if (!bt) continue;
      out.add(pf->degree + bt->degree, bt->weight, c * m);
    }
  }
  out.status = CohomologyTable::Status::Exact;
  return out;
}

CohomologyTable cohomology_B2(const FlagContext& ctx, const Partition& lambda,
                              const Partition& mu) {
  check_bundle(ctx, lambda, mu);
  return duality(ctx, cohomology_B1(ctx.dualContext(), mu, lambda));
}

CohomologyTable duality(const FlagContext& ctx, const CohomologyTable& table) {
  check_context(ctx);
  CohomologyTable out;
  out.status = table.status;
  for (const auto& [deg, reps] : table.byDegree)
    for (const auto& [w, m] : reps.terms) out.add(deg, dual_weight(w), m);
  return out;
}

CohomologyTable reconcile(const CohomologyTable& b1, const CohomologyTable& b2) {
  // Gather the degree range and the union of weights.
  int maxDeg = -1;
  for (const auto& t : {&b1, &b2})
    if (!t->byDegree.empty()) maxDeg = std::max(maxDeg, t->byDegree.rbegin()->first);
  std::map<Weight, long long, std::greater<Weight>> chi1 = b1.euler(), chi2 = b2.euler();

  std::map<Weight, std::vector<long long>, std::greater<Weight>> caps;
  auto collect = [&](const CohomologyTable& t, int which) {
    for (const auto& [deg, reps] : t.byDegree)
      for (const auto& [w, m] : reps.terms) {
        auto& row = caps.try_emplace(w).first->second;
        if (row.empty()) row.assign(2 * (maxDeg + 1), 0);
        row[2 * deg + which] = m;
      }
  };
  collect(b1, 0);
  collect(b2, 1);

  CohomologyTable exact;
  bool ambiguous = false;
  for (auto& [w, row] : caps) {
    long long chi = chi1.count(w) ? chi1.at(w) : 0;
    long long chiB2 = chi2.count(w) ? chi2.at(w) : 0;
    if (chi != chiB2)
      throw std::logic_error("reconcile: the two filtrations disagree on the Euler characteristic");
    std::vector<long long> cap(maxDeg + 1, 0);
    for (int d = 0; d <= maxDeg; ++d) cap[d] = std::min(row[2 * d], row[2 * d + 1]);

    // Count solutions of sum (-1)^d x_d = chi with 0 <= x_d <= cap_d; the count
    // is clamped at 2 (only "zero / one / many" matters).
    long long lo = 0, hi = 0;
    for (int d = 0; d <= maxDeg; ++d) (d % 2 ? lo : hi) += cap[d];
    lo = -lo;
    const long long span = hi - lo + 1;
    // ways[i][s-lo] = number of ways using degrees >= i to reach signed sum s.
    std::vector<std::vector<int>> ways(maxDeg + 2, std::vector<int>(span, 0));
    {
      long long tlo = 0, thi = 0;  // attainable range for suffix sums
      ways[maxDeg + 1][0 - lo] = 1;
      for (int d = maxDeg; d >= 0; --d) {
        long long nlo = tlo - (d % 2 ? cap[d] : 0), nhi = thi + (d % 2 ? 0 : cap[d]);
        for (long long s = nlo; s <= nhi; ++s) {
          int total = 0;
          for (long long x = 0; x <= cap[d] && total < 2; ++x) {
            long long prev = s - (d % 2 ? -x : x);
            if (prev < tlo || prev > thi) continue;
            total = std::min(2, total + ways[d + 1][prev - lo]);
          }
          ways[d][s - lo] = total;
        }
        tlo = nlo;
        thi = nhi;
      }
    }
    int count = (chi >= lo && chi <= hi) ? ways[0][chi - lo] : 0;
    if (count == 0)
      throw std::logic_error("reconcile: no admissible multiplicity vector for a weight");
    if (count >= 2) {
      ambiguous = true;
      continue;
    }
    // Unique: walk the table to recover the solution.
    long long s = chi;
    for (int d = 0; d <= maxDeg; ++d) {
      for (long long x = 0; x <= cap[d]; ++x) {
        long long prev = s - (d % 2 ? -x : x);
        if (prev < lo || prev > hi) continue;
        if (ways[d + 1][prev - lo] > 0) {
          if (x > 0) exact.add(d, w, x);
          s = prev;
          break;
        }
      }
    }
  }

  if (!ambiguous) {
    exact.status = CohomologyTable::Status::Exact;
    return exact;
  }
  // Under-determined somewhere: report the degreewise min as an upper bound.
  CohomologyTable bound;
  bound.status = CohomologyTable::Status::Ambiguous;
  for (const auto& [w, row] : caps)
    for (int d = 0; d <= maxDeg; ++d)
      if (long long m = std::min(row[2 * d], row[2 * d + 1]); m > 0) bound.add(d, w, m);
  return bound;
}

bool concentration_range(const FlagContext& ctx, const Partition& lambda, const Partition& mu) {
  return ctx.n <= 4 && part_at(lambda, 1) <= 3 && part_at(mu, 1) <= 3;
}

std::optional<CohomologyTable> concentrate_single_degree(const CohomologyTable& b1,
                                                         const CohomologyTable& b2) {
  std::map<Weight, long long, std::greater<Weight>> chi1 = b1.euler(), chi2 = b2.euler();
  if (chi1 != chi2)
    throw std::logic_error("reconcile: the two filtrations disagree on the Euler characteristic");

  CohomologyTable out;
  out.status = CohomologyTable::Status::Exact;
  if (chi1.empty()) return out;  // euler() keeps only nonzero entries

  auto multAt = [](const CohomologyTable& t, int deg, const Weight& w) -> long long {
    auto it = t.byDegree.find(deg);
    if (it == t.byDegree.end()) return 0;
    auto jt = it->second.terms.find(w);
    return jt == it->second.terms.end() ? 0 : jt->second;
  };
  int maxDeg = -1;
  for (const auto* t : {&b1, &b2})
    if (!t->byDegree.empty()) maxDeg = std::max(maxDeg, t->byDegree.rbegin()->first);

  std::optional<int> unique;
  for (int d = 0; d <= maxDeg; ++d) {
    bool ok = true;
    for (const auto& [w, c] : chi1) {
      long long wanted = (d % 2 == 0) ? c : -c;
      if (wanted < 0 || std::min(multAt(b1, d, w), multAt(b2, d, w)) < wanted) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (unique) return std::nullopt;  // several degrees qualify
    unique = d;
  }
  if (!unique) return std::nullopt;  // hypothesis contradicted by the caps
  for (const auto& [w, c] : chi1) out.add(*unique, w, c > 0 ? c : -c);
  return out;
}

std::optional<CohomologyTable> hook_cohomology(const FlagContext& ctx, int a, int b,
                                               const Partition& mu) {
  check_context(ctx);
  const int r1 = ctx.r1, r2 = ctx.r2, n = ctx.n;
  if (!(0 < r1 && r1 < r2 && r2 < n)) throw std::invalid_argument("hook: need 0 < r1 < r2 < n");
  if (!(0 < a && a <= n - r2)) throw std::invalid_argument("hook: need 0 < a <= n-r2");
  if (!(0 <= b && b < r2)) throw std::invalid_argument("hook: need 0 <= b < r2");

  CohomologyTable out;
  if (partition_rows(mu) > n - r1) return out;  // zero bundle

  Partition lambda(static_cast<size_t>(b) + 1, 1);
  lambda[0] = a + 1;

  if (a < n - r2) {
    if (b >= r1) return out;  // every summand of the graded bundle pushes to zero
    auto bt = bott_grassmannian(r1, n, pad_to(lambda, r1), dual_weight(pad_to(mu, n - r1)));
    if (bt) out.add(bt->degree, bt->weight, 1);
    return out;
  }

  // a == n-r2: covered only for mu a single nonzero row.
  if (partition_rows(mu) != 1) return std::nullopt;
  const int k = mu[0];

  // Each family contributes multiplicity one; coincident (degree, weight) pairs
  // across families are not double-counted.
  std::map<std::pair<int, Weight>, bool> seen;
  auto put = [&](int degree, std::vector<int> w) {
    if (static_cast<int>(w.size()) != n) throw std::logic_error("hook: weight length");
    if (!is_dominant(w)) throw std::logic_error("hook: non-dominant weight");
    if (seen.emplace(std::make_pair(degree, w), true).second) out.add(degree, w, 1);
  };
  auto runs = [&](int ones, int zeros, int minusOnes, std::optional<int> last) {
    std::vector<int> w;
    w.insert(w.end(), ones, 1);
    w.insert(w.end(), zeros, 0);
    w.insert(w.end(), minusOnes, -1);
    if (last) w.push_back(*last);
    return w;
  };

  if (k == b + 1 && b < r1) put(a + k - 1, runs(a, n - a, 0, std::nullopt));
  if (k == r1 + 1 && r1 <= b) put(a + r1, runs(a + b - r1, n - (a + b - r1), 0, std::nullopt));
  if (k > r1)
    for (int j = std::max(0, b - r1); j <= std::min(b, r2 - r1 - 2); ++j)
      put(a + r1, runs(a + 1 + j, b + r2 - r1 - 2 * j - 2, r1 + j - b, r1 - k));
  if (k > r1 + 1)
    for (int j = std::max(0, b - r1); j <= std::min(b, r2 - r1 - 1); ++j)
      put(a + r1, runs(a + j, b + r2 - r1 - 2 * j - 1, r1 + j - b, r1 - k + 1));
  return out;
}

}  // namespace a3res

#include "a3res/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "a3res/bott.hpp"

namespace a3res {
namespace {

using SummandKey = std::tuple<Weight, Weight, Weight>;
using SummandMap = std::map<SummandKey, long long, std::greater<SummandKey>>;

Weight zero_weight(int n) { return Weight(n, 0); }

std::vector<ResolutionSummand> to_summands(const SummandMap& m) {
  std::vector<ResolutionSummand> out;
  out.reserve(m.size());
  for (const auto& [key, mult] : m) {
    ResolutionSummand s;
    std::tie(s.w1, s.w2, s.w3) = key;
    s.mult = mult;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

QuiverDatum datum_from_ranks(const std::vector<int>& d, int a, int b, int c) {
  if (d.size() != 3)
    throw std::invalid_argument("dimension vector must have exactly three entries");
  for (int x : d)
    if (x < 0) throw std::invalid_argument("dimension vector entries must be non-negative");
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("ranks must be non-negative");

  QuiverDatum q;
  q.d = d;
  q.a = a;
  q.b = b;
  q.c = c;
  q.b1 = a - c;
  q.b2 = b - c;
  q.a1 = d[0] - a;
  q.a2 = d[1] - a - b + c;
  q.a3 = d[2] - b;

  auto bad = [](const char* name, const char* formula, int v) {
    std::ostringstream os;
    os << "infeasible ranks: " << name << " = " << formula << " = " << v << " < 0";
    throw std::invalid_argument(os.str());
  };
  if (q.b1 < 0) bad("b1", "a - c", q.b1);
  if (q.b2 < 0) bad("b2", "b - c", q.b2);
  if (q.a1 < 0) bad("a1", "d1 - a", q.a1);
  if (q.a2 < 0) bad("a2", "d2 - a - b + c", q.a2);
  if (q.a3 < 0) bad("a3", "d3 - b", q.a3);
  return q;
}

DesingularizationParams desingularization_params(const QuiverDatum& q) {
  DesingularizationParams p;
  p.r1 = q.a;
  p.r2 = q.d[1] - q.b2;
  p.n = q.d[1];
  p.c = q.c;
  p.d3 = q.d[2];
  return p;
}

long long xi_rank(const QuiverDatum& q) {
  auto p = desingularization_params(q);
  return static_cast<long long>(q.d[0]) * (p.n - p.r1) +
         static_cast<long long>(p.r2) * (p.d3 - p.c);
}

std::vector<XiSummand> xi_exterior_summands(const QuiverDatum& q, int t) {
  if (t < 0 || t > xi_rank(q))
    throw std::invalid_argument("exterior power degree outside [0, rank xi]");
  auto p = desingularization_params(q);
  std::vector<XiSummand> out;
  int lamMax = p.r2 * (p.d3 - p.c);
  for (int s = 0; s <= std::min(t, lamMax); ++s) {
    auto lams = partitions_of(s, p.r2, p.d3 - p.c);
    auto mus = partitions_of(t - s, p.n - p.r1, q.d[0]);
    if (lams.empty() || mus.empty()) continue;
    for (const auto& lam : lams)
      for (const auto& mu : mus) out.push_back({mu, lam});
  }
  return out;
}

long long orbit_codimension(const QuiverDatum& q) {
  auto p = desingularization_params(q);
  long long dimFlag = static_cast<long long>(p.r1) * (p.n - p.r1) +
                      static_cast<long long>(p.r2 - p.r1) * (p.n - p.r2);
  long long dimGr = static_cast<long long>(p.c) * (p.d3 - p.c);
  return xi_rank(q) - dimFlag - dimGr;
}

std::vector<EquivariantTerm> resolution_terms(const QuiverDatum& q, int iMax, Method method,
                                              const Limits& limits) {
  if (iMax < 0) throw std::invalid_argument("iMax must be non-negative");
  auto p = desingularization_params(q);
  FlagContext ctx = p.ctx();
  int d1 = q.d[0];

  long long dimX = xi_rank(q) - orbit_codimension(q);
  long long tCap = std::min<long long>(xi_rank(q), static_cast<long long>(iMax) + dimX);

  std::map<std::pair<Partition, Partition>, CohomologyOutcome> cache;
  std::map<std::pair<int, int>, SummandMap> acc;  // (i, twist) -> summands
  std::map<std::pair<int, int>, bool> amb;

  for (int t = 0; t <= tCap; ++t) {
    for (const auto& [mu, lam] : xi_exterior_summands(q, t)) {
      auto qf = grassmannian_quotient_factor(lam, p.c, p.d3);
      if (!qf) continue;
      auto key = std::make_pair(lam, mu);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, cohomology_flag(ctx, lam, mu, method, limits)).first;
      const CohomologyTable& table = it->second.table;
      bool isAmb = table.status == CohomologyTable::Status::Ambiguous;
      if (isAmb && method != Method::SplitOnly)
        throw std::logic_error("ambiguous cohomology reached the resolution assembly");
      Weight w1 = pad_to(conjugate(mu), d1);
      for (const auto& [deg, reps] : table.byDegree) {
        int j = deg + qf->degree;
        int i = t - j;
        if (i < 0)
          throw std::logic_error("cohomology class lands in negative homological degree");
        if (i > iMax) continue;
        for (const auto& [w2, m] : reps.terms) {
          acc[{i, t}][{w1, w2, qf->weight}] += m;
          if (isAmb) amb[{i, t}] = true;
        }
      }
    }
  }

  // F_0 must be the single trivial summand A.
  {
    SummandMap f0;
    for (const auto& [key, sums] : acc)
      if (key.first == 0)
        for (const auto& [k, m] : sums) f0[k] += m;
    SummandKey trivial{zero_weight(q.d[0]), zero_weight(q.d[1]), zero_weight(q.d[2])};
    if (f0.size() != 1 || f0.begin()->first != trivial || f0.begin()->second != 1)
      throw std::logic_error("F_0 is not the single trivial summand");
  }

  std::vector<EquivariantTerm> out;
  for (const auto& [key, sums] : acc) {
    if (sums.empty()) continue;
    EquivariantTerm term;
    term.i = key.first;
    term.twist = key.second;
    term.summands = to_summands(sums);
    auto at = amb.find(key);
    term.ambiguous = at != amb.end() && at->second;
    out.push_back(std::move(term));
  }
  std::sort(out.begin(), out.end(), [](const EquivariantTerm& x, const EquivariantTerm& y) {
    return std::tie(x.i, x.twist) < std::tie(y.i, y.twist);
  });
  return out;
}

MinimalGenerators minimal_generators(const QuiverDatum& q, Method method,
                                     const Limits& limits) {
  int d1 = q.d[0], d2 = q.d[1], d3 = q.d[2];
  MinimalGenerators out;

  auto column = [](int k) { return Partition(k, 1); };
  if (q.a < std::min(d1, d2)) {
    GeneratorFamily f;
    f.name = "X-minors";
    f.size = q.a + 1;
    f.w1 = pad_to(column(q.a + 1), d1);
    f.w2 = dual_weight(pad_to(column(q.a + 1), d2));
    f.w3 = zero_weight(d3);
    out.families.push_back(std::move(f));
  }
  if (q.b < std::min(d2, d3)) {
    GeneratorFamily f;
    f.name = "Y-minors";
    f.size = q.b + 1;
    f.w1 = zero_weight(d1);
    f.w2 = pad_to(column(q.b + 1), d2);
    f.w3 = pad_to(column(q.b + 1), d3);
    out.families.push_back(std::move(f));
  }
  if (q.c < std::min(q.a, q.b)) {
    GeneratorFamily f;
    f.name = "YX-minors";
    f.size = q.c + 1;
    f.w1 = pad_to(column(q.c + 1), d1);
    f.w2 = zero_weight(d2);
    f.w3 = pad_to(column(q.c + 1), d3);
    out.families.push_back(std::move(f));
  }

  SummandMap predicted;
  for (const auto& f : out.families) predicted[{f.w1, f.w2, f.w3}] += 1;

  SummandMap f1;
  for (const auto& term : resolution_terms(q, 1, method, limits))
    if (term.i == 1)
      for (const auto& s : term.summands) f1[{s.w1, s.w2, s.w3}] += s.mult;

  out.computedF1 = to_summands(f1);
  out.f1Match = predicted == f1;
  return out;
}

}  // namespace a3res
